#include "qcong/laurent_poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

namespace {

std::atomic<std::size_t> g_karatsuba_threshold{64};

void add_into(std::vector<Int>& dst, std::size_t offset, const std::vector<Int>& src) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] += src[i];
}

std::vector<Int> karatsuba(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t threshold = g_karatsuba_threshold.load(std::memory_order_relaxed);
  if (a.size() < threshold || b.size() < threshold) return mul_coeffs_schoolbook(a, b);

  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto split = [half](const std::vector<Int>& v) {
    std::vector<Int> lo(v.begin(), v.begin() + static_cast<long>(std::min(half, v.size())));
    std::vector<Int> hi;
    if (v.size() > half) hi.assign(v.begin() + static_cast<long>(half), v.end());
    return std::pair{std::move(lo), std::move(hi)};
  };
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  if (a1.empty() || b1.empty()) {
    // Unbalanced operands: split the longer one only.
    std::vector<Int> out;
    if (a1.empty()) {
      add_into(out, 0, karatsuba(a, b0));
      add_into(out, half, karatsuba(a, b1));
    } else {
      add_into(out, 0, karatsuba(a0, b));
      add_into(out, half, karatsuba(a1, b));
    }
    return out;
  }

  std::vector<Int> z0 = karatsuba(a0, b0);
  std::vector<Int> z2 = karatsuba(a1, b1);
  std::vector<Int> sa = a0, sb = b0;
  add_into(sa, 0, a1);
  add_into(sb, 0, b1);
  std::vector<Int> z1 = karatsuba(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  std::vector<Int> out(a.size() + b.size() - 1);
  add_into(out, 0, z0);
  add_into(out, half, z1);
  add_into(out, 2 * half, z2);
  out.resize(a.size() + b.size() - 1);
  return out;
}

}  // namespace

std::size_t karatsuba_threshold() { return g_karatsuba_threshold.load(); }

void set_karatsuba_threshold(std::size_t terms) {
  g_karatsuba_threshold.store(std::max<std::size_t>(terms, 2));
}

std::vector<Int> mul_coeffs_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<Int> mul_coeffs(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  return karatsuba(a, b);
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(const Int& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(long min_exp, std::vector<Int> coeffs)
    : min_exp_(min_exp), c_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Int& c, long exp) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(exp, std::vector<Int>{c});
}

LaurentPoly LaurentPoly::binomial(int sign, long exp) {
  LaurentPoly one(1);
  one.mul_binomial(sign, exp);
  return one;
}

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    min_exp_ = 0;
    return;
  }
  std::size_t end = c_.size();
  while (sgn(c_[end - 1]) == 0) --end;
  if (lead > 0 || end < c_.size()) {
    c_.erase(c_.begin() + static_cast<long>(end), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  }
  min_exp_ += static_cast<long>(lead);
}

Int LaurentPoly::coeff(long exp) const {
  if (c_.empty() || exp < min_exp_ || exp > max_exp()) return 0;
  return c_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(min_exp_, o.min_exp_);
  const long hi = std::max(max_exp(), o.max_exp());
  if (lo < min_exp_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(min_exp_ - lo), Int(0));
    min_exp_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  const std::size_t off = static_cast<std::size_t>(o.min_exp_ - lo);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] += o.c_[i];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.min_exp_ + b.min_exp_, mul_coeffs(a.c_, b.c_));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Int& s) {
  if (sgn(s) == 0) return *this = LaurentPoly();
  for (auto& x : c_) x *= s;
  return *this;
}

void LaurentPoly::mul_binomial(int sign, long exp) {
  if (is_zero()) return;
  if (exp == 0) {
    // (1 - sign) is 0 or 2
    if (sign == 1) {
      *this = LaurentPoly();
    } else {
      *this *= Int(2);
    }
    return;
  }
  if (exp < 0) {
    // (1 - s q^e) = -s q^e (1 - s q^{-e})
    mul_binomial(sign, -exp);
    min_exp_ += exp;
    if (sign == 1) *this = -*this;
    return;
  }
  const std::size_t e = static_cast<std::size_t>(exp);
  const std::size_t old = c_.size();
  c_.resize(old + e);
  for (std::size_t i = old + e; i-- > e;) {
    if (sign == 1) {
      c_[i] -= c_[i - e];
    } else {
      c_[i] += c_[i - e];
    }
  }
  normalize();
}

LaurentPoly LaurentPoly::shifted(long s) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += s;
  return r;
}

LaurentPoly LaurentPoly::truncated(long bound) const {
  if (is_zero() || max_exp() < bound) return *this;
  if (bound <= min_exp_) return {};
  std::vector<Int> c(c_.begin(), c_.begin() + (bound - min_exp_));
  return LaurentPoly(min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<Int> c(c_.rbegin(), c_.rend());
  return LaurentPoly(-max_exp(), std::move(c));
}

LaurentPoly LaurentPoly::dilated(long b) const {
  if (b < 1) throw Error(ErrorKind::InvalidArgument, "dilation factor must be >= 1");
  if (is_zero() || b == 1) return *this;
  std::vector<Int> c((c_.size() - 1) * static_cast<std::size_t>(b) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(b)] = c_[i];
  return LaurentPoly(min_exp_ * b, std::move(c));
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::complex<double> LaurentPoly::eval(std::complex<double> q) const {
  std::complex<double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i].get_d();
  return acc * std::pow(q, static_cast<double>(min_exp_));
}

Int LaurentPoly::eval(const Int& q) const {
  if (!is_zero() && min_exp_ < 0) {
    throw Error(ErrorKind::InvalidArgument, "integer evaluation of a Laurent polynomial");
  }
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  Int qp;
  mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(min_exp_));
  return acc * qp;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Int& c = c_[i];
    if (sgn(c) == 0) continue;
    const long e = min_exp_ + static_cast<long>(i);
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::map<long, Int> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw Error(ErrorKind::ParseError, std::string(what) + " at offset " + std::to_string(i) +
                                           " in \"" + std::string(text) + "\"");
  };
  auto read_int = [&](std::string& digits) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  };

  skip_ws();
  if (i == text.size()) fail("empty polynomial");
  bool expect_term = true;
  bool pending_op = false;
  int sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      if (pending_op) fail("repeated operator");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      expect_term = true;
      pending_op = true;
      continue;
    }
    if (!expect_term) fail("expected '+' or '-'");
    Int coef = 1;
    std::string digits;
    read_int(digits);
    bool has_coef = !digits.empty();
    if (has_coef) coef = Int(digits);
    skip_ws();
    long exp = 0;
    if (i < text.size() && text[i] == '*') {
      if (!has_coef) fail("dangling '*'");
      ++i;
      skip_ws();
      if (i == text.size() || text[i] != 'q') fail("expected 'q'");
    } else if (has_coef && i < text.size() && text[i] == 'q') {
      fail("expected '*' between coefficient and q");
    }
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        bool paren = i < text.size() && text[i] == '(';
        if (paren) ++i;
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) esign = text[i++] == '-' ? -1 : 1;
        std::string ed;
        read_int(ed);
        if (ed.empty()) fail("missing exponent");
        exp = esign * std::stol(ed);
        if (paren) {
          if (i == text.size() || text[i] != ')') fail("expected ')'");
          ++i;
        }
      }
    } else if (!has_coef) {
      fail("expected term");
    }
    terms[exp] += sign * coef;
    sign = 1;
    expect_term = false;
    pending_op = false;
  }
  if (expect_term) fail("trailing operator");
  LaurentPoly out;
  for (const auto& [e, c] : terms) out += monomial(c, e);
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    arr.push_back({c_[i].get_str(), min_exp_ + static_cast<long>(i)});
  }
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial JSON must be an array");
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "polynomial term must be [\"coef\", exp]");
    }
    out += monomial(Int(t[0].get<std::string>()), t[1].get<long>());
  }
  return out;
}

DivRem divrem(const LaurentPoly& a, const LaurentPoly& m) {
  if (m.is_zero() || m.coeffs().back() != 1) {
    throw Error(ErrorKind::NonMonicModulus, "modulus " + m.to_string());
  }
  if (m.min_exp() < 0 || (!a.is_zero() && a.min_exp() < 0)) {
    throw Error(ErrorKind::InvalidArgument, "divrem needs ordinary polynomials (min_exp >= 0)");
  }
  const long dm = m.max_exp();
  if (a.is_zero() || a.max_exp() < dm) return {LaurentPoly(), a};

  // Work on dense vectors indexed by exponent.
  std::vector<Int> r(static_cast<std::size_t>(a.max_exp() + 1));
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a.min_exp()) + i] = a.coeffs()[i];
  std::vector<Int> md(static_cast<std::size_t>(dm + 1));
  for (std::size_t i = 0; i < m.size(); ++i) md[static_cast<std::size_t>(m.min_exp()) + i] = m.coeffs()[i];

  const std::size_t dq = r.size() - 1 - static_cast<std::size_t>(dm);
  std::vector<Int> q(dq + 1);
  // Sparse modulus terms below the leading one.
  std::vector<std::pair<std::size_t, Int>> tail;
  for (std::size_t j = 0; j < static_cast<std::size_t>(dm); ++j) {
    if (sgn(md[j]) != 0) tail.emplace_back(j, md[j]);
  }
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Int& lead = r[k + static_cast<std::size_t>(dm)];
    if (sgn(lead) == 0) continue;
    q[k] = lead;
    for (const auto& [j, c] : tail) mpz_submul(r[k + j].get_mpz_t(), lead.get_mpz_t(), c.get_mpz_t());
    r[k + static_cast<std::size_t>(dm)] = 0;
  }
  r.resize(static_cast<std::size_t>(dm));
  return {LaurentPoly(0, std::move(q)), LaurentPoly(0, std::move(r))};
}

}  // namespace qcong
