#include "qcong/qseries.hpp"

#include <algorithm>
#include <map>

#include "qcong/error.hpp"

namespace qcong {

// ---------------------------------------------------------------------------
// TermSpec

void TermSpec::validate(long upper) const {
  if (sign_k != 1 && sign_k != -1) throw Error(ErrorKind::InvalidArgument, "sign_k must be +-1");
  if (quad_coef < 0) throw Error(ErrorKind::InvalidArgument, "quad_coef must be >= 0");
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw Error(ErrorKind::InvalidArgument, "factor sign must be +-1");
    if (f.step < 1) throw Error(ErrorKind::InvalidArgument, "factor step must be >= 1");
    if (f.mult == 0) throw Error(ErrorKind::InvalidArgument, "factor mult must be nonzero");
  }
  for (const auto& a : affine) {
    if (a.sign != 1 && a.sign != -1) throw Error(ErrorKind::InvalidArgument, "affine sign must be +-1");
    if (a.mult != 1 && a.mult != -1) throw Error(ErrorKind::InvalidArgument, "affine mult must be +-1");
    if (a.mult == -1) {
      const long lo = std::min(a.d, a.c * upper + a.d);
      if (lo < 1) {
        throw Error(ErrorKind::InvalidArgument, "denominator affine factor needs c*k + d >= 1");
      }
    }
  }
}

nlohmann::json TermSpec::to_json() const {
  nlohmann::json j;
  j["factors"] = nlohmann::json::array();
  for (const auto& f : factors) {
    j["factors"].push_back({{"sign", f.sign}, {"a_exp", f.a_exp}, {"step", f.step}, {"mult", f.mult}});
  }
  j["sign_k"] = sign_k;
  j["quad_coef"] = quad_coef;
  j["lin_coef"] = lin_coef;
  j["affine"] = nlohmann::json::array();
  for (const auto& a : affine) {
    j["affine"].push_back({{"sign", a.sign}, {"c", a.c}, {"d", a.d}, {"mult", a.mult}});
  }
  return j;
}

TermSpec TermSpec::from_json(const nlohmann::json& j) {
  try {
    TermSpec t;
    for (const auto& f : j.at("factors")) {
      t.factors.push_back({f.at("sign").get<int>(), f.at("a_exp").get<long>(), f.at("step").get<long>(),
                           f.at("mult").get<int>()});
    }
    t.sign_k = j.value("sign_k", 1);
    t.quad_coef = j.value("quad_coef", 0L);
    t.lin_coef = j.value("lin_coef", 0L);
    if (j.contains("affine")) {
      for (const auto& a : j.at("affine")) {
        t.affine.push_back(
            {a.at("sign").get<int>(), a.at("c").get<long>(), a.at("d").get<long>(), a.at("mult").get<int>()});
      }
    }
    t.validate(0);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("TermSpec JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// QProduct

QProduct& QProduct::pochhammer(int sign, long a, long step, long len, int mult) {
  for (long j = 0; j < len; ++j) factors.push_back({sign, a + j * step, mult});
  return *this;
}

QProduct& QProduct::factor(int sign, long exp, int mult) {
  factors.push_back({sign, exp, mult});
  return *this;
}

QProduct& QProduct::times(const QProduct& o) {
  scalar *= o.scalar;
  q_exp += o.q_exp;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

RatPoly QProduct::to_ratpoly() const {
  LaurentPoly num = LaurentPoly::monomial(scalar, q_exp);
  LaurentPoly den(1);
  for (const auto& f : factors) {
    for (int i = 0; i < std::abs(f.mult); ++i) {
      (f.mult > 0 ? num : den).mul_binomial(f.sign, f.exp);
    }
  }
  if (den.is_zero()) throw Error(ErrorKind::SingularSpecialization, "denominator factor (1 - q^0)");
  return {num, den};
}

LocalFraction QProduct::to_local(const LocalRing& ring) const {
  LocalFraction f = local_one(ring);
  ring.mul_scalar(f.num, scalar);
  ring.mul_q_power(f.num, q_exp);
  for (const auto& lf : factors) mul_factor(ring, f, lf.sign, lf.exp, lf.mult);
  return f;
}

// ---------------------------------------------------------------------------
// Terms

LaurentPoly pochhammer(const PochFactor& p, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "pochhammer length must be >= 0");
  LaurentPoly out(1);
  for (long j = 0; j < k; ++j) out.mul_binomial(p.sign, p.a_exp + j * p.step);
  return out;
}

QProduct term_product(const TermSpec& t, long k) {
  QProduct p;
  for (const auto& f : t.factors) p.pochhammer(f.sign, f.a_exp, f.step, k, f.mult);
  if (t.sign_k == -1 && k % 2 == 1) p.scalar = -1;
  p.q_exp = t.quad_coef * k * k + t.lin_coef * k;
  for (const auto& a : t.affine) p.factor(-a.sign, a.c * k + a.d, a.mult);
  return p;
}

QProduct term_ratio(const TermSpec& t, long j) {
  QProduct p;
  for (const auto& f : t.factors) p.factor(f.sign, f.a_exp + j * f.step, f.mult);
  p.scalar = t.sign_k;
  p.q_exp = t.quad_coef * (2 * j + 1) + t.lin_coef;
  for (const auto& a : t.affine) {
    if (a.c == 0) continue;
    p.factor(-a.sign, a.c * (j + 1) + a.d, a.mult);
    p.factor(-a.sign, a.c * j + a.d, -a.mult);
  }
  return p;
}

namespace {

// A denominator factor (1 - q^0) makes the step undefined, even when a
// numerator factor vanishes in the same step (0/0).
void require_nonsingular(const QProduct& p) {
  for (const auto& f : p.factors) {
    if (f.mult < 0 && LocalRing::is_null_factor(f.sign, f.exp)) {
      throw Error(ErrorKind::SingularSpecialization, "denominator factor (1 - q^0)");
    }
  }
}

// Once a summand vanishes the later ones are 0 times a ratio; a pole in any
// of those ratios leaves them 0/0, so the specialization is undefined.
void require_nonsingular_tail(const TermSpec& t, long from, long upper) {
  for (long j = from; j < upper; ++j) require_nonsingular(term_ratio(t, j));
}

// Running sum S/B with current term A/B, shared by the exact and local paths.
struct ExactAccumulator {
  LaurentPoly sum, term{1}, den{1};
  bool dead = false;

  void apply(const QProduct& p, bool first) {
    require_nonsingular(p);
    term *= p.scalar;
    term = term.shifted(p.q_exp);
    for (const auto& f : p.factors) {
      if (f.mult > 0) {
        for (int i = 0; i < f.mult; ++i) term.mul_binomial(f.sign, f.exp);
        if (term.is_zero()) dead = true;
      } else {
        for (int i = 0; i < -f.mult; ++i) {
          den.mul_binomial(f.sign, f.exp);
          if (!first) sum.mul_binomial(f.sign, f.exp);
        }
      }
    }
  }

  void check_size() const {
    auto span = [](const LaurentPoly& p) { return p.is_zero() ? 0 : p.max_exp() - p.min_exp(); };
    if (span(sum) > kExactDegreeGuard || span(den) > kExactDegreeGuard || span(term) > kExactDegreeGuard) {
      throw Error(ErrorKind::TooLarge, "exact sum exceeds the degree guard; use the quotient-ring path");
    }
  }
};

// Upper bound on the degree span of the common denominator plus the last
// term, so hopeless requests fail before any arithmetic.
long estimated_span(const TermSpec& t, long upper) {
  long span = std::abs(t.quad_coef * upper * upper + t.lin_coef * upper);
  for (const auto& f : t.factors) {
    for (long j = 0; j < upper && span <= kExactDegreeGuard; ++j) {
      span += std::abs(f.a_exp + j * f.step) * std::abs(f.mult);
    }
  }
  for (const auto& a : t.affine) span += std::abs(a.c * upper + a.d) + std::abs(a.d);
  return span;
}

}  // namespace

RatPoly hyper_sum_exact(const TermSpec& t, long upper) {
  if (upper < 0) throw Error(ErrorKind::InvalidArgument, "upper must be >= 0");
  t.validate(upper);
  if (estimated_span(t, upper) > kExactDegreeGuard) {
    throw Error(ErrorKind::TooLarge, "exact sum exceeds the degree guard; use the quotient-ring path");
  }
  ExactAccumulator acc;
  acc.apply(term_product(t, 0), true);
  if (acc.dead) require_nonsingular_tail(t, 0, upper);
  acc.sum = acc.term;
  for (long j = 0; j < upper && !acc.dead; ++j) {
    acc.apply(term_ratio(t, j), false);
    if (acc.dead) {
      require_nonsingular_tail(t, j + 1, upper);
      break;
    }
    acc.sum += acc.term;
    acc.check_size();
  }
  return {acc.sum, acc.den};
}

LocalFraction hyper_sum_local(const TermSpec& t, long upper, const LocalRing& ring) {
  if (upper < 0) throw Error(ErrorKind::InvalidArgument, "upper must be >= 0");
  t.validate(upper);
  LocalRing::Series sum = ring.zero();
  LocalRing::Series term = ring.one();
  LocalRing::Series den = ring.one();
  int val = 0;
  bool dead = false;

  auto apply = [&](const QProduct& p, bool first) {
    require_nonsingular(p);
    ring.mul_scalar(term, p.scalar);
    ring.mul_q_power(term, p.q_exp);
    for (const auto& f : p.factors) {
      if (LocalRing::is_null_factor(f.sign, f.exp)) {
        dead = true;
        return;
      }
      for (int i = 0; i < std::abs(f.mult); ++i) {
        if (f.mult > 0) {
          val += ring.mul_binomial(term, f.sign, f.exp);
        } else {
          val -= ring.mul_binomial(den, f.sign, f.exp);
          if (!first) ring.mul_binomial(sum, f.sign, f.exp);
        }
      }
    }
  };
  auto accumulate = [&](long index) {
    if (val < 0) {
      throw Error(ErrorKind::PoleAtCyclotomic, "summand k=" + std::to_string(index) +
                                                   " has a pole at Phi_" + std::to_string(ring.n()));
    }
    if (val < ring.k()) ring.add_shifted(sum, term, val);
  };

  apply(term_product(t, 0), true);
  if (dead) require_nonsingular_tail(t, 0, upper);
  if (!dead) accumulate(0);
  for (long j = 0; j < upper && !dead; ++j) {
    apply(term_ratio(t, j), false);
    if (dead) {
      require_nonsingular_tail(t, j + 1, upper);
      break;
    }
    accumulate(j + 1);
  }
  return {0, std::move(sum), std::move(den)};
}

QuotientElem hyper_sum_mod(const TermSpec& t, long upper, long n, int k) {
  LocalRing ring(n, k);
  return to_quotient(ring, hyper_sum_local(t, upper, ring));
}

// ---------------------------------------------------------------------------
// Power series

PowerSeriesZ::PowerSeriesZ(long order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "series order must be >= 1");
  c_.resize(static_cast<std::size_t>(order));
}

PowerSeriesZ::PowerSeriesZ(long order, std::vector<Int> coeffs) : PowerSeriesZ(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

PowerSeriesZ PowerSeriesZ::one(long order) {
  PowerSeriesZ s(order);
  s.c_[0] = 1;
  return s;
}

void PowerSeriesZ::mul_binomial_power(int sign, long m, int e) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "binomial exponent must be >= 1");
  if (e == 0) return;
  const std::size_t N = c_.size();
  const std::size_t step = static_cast<std::size_t>(m);
  if (step >= N) return;
  const int mag = std::abs(e);
  // coefficients of (1 - sign x)^mag
  std::vector<Int> b(static_cast<std::size_t>(mag) + 1);
  for (int j = 0; j <= mag; ++j) {
    mpz_bin_uiui(b[static_cast<std::size_t>(j)].get_mpz_t(), static_cast<unsigned long>(mag),
                 static_cast<unsigned long>(j));
    if ((j % 2 == 1) && sign == 1) b[static_cast<std::size_t>(j)] = -b[static_cast<std::size_t>(j)];
  }
  if (e > 0) {
    // descending in place: c[i] = sum_j b_j c_old[i - j m]
    for (std::size_t i = N; i-- > step;) {
      for (std::size_t j = 1; j <= static_cast<std::size_t>(mag) && j * step <= i; ++j) {
        mpz_addmul(c_[i].get_mpz_t(), b[j].get_mpz_t(), c_[i - j * step].get_mpz_t());
      }
    }
  } else {
    // ascending in place: c[i] = c_old[i] - sum_{j>=1} b_j c_new[i - j m]
    for (std::size_t i = step; i < N; ++i) {
      for (std::size_t j = 1; j <= static_cast<std::size_t>(mag) && j * step <= i; ++j) {
        mpz_submul(c_[i].get_mpz_t(), b[j].get_mpz_t(), c_[i - j * step].get_mpz_t());
      }
    }
  }
}

PowerSeriesZ PowerSeriesZ::inverse() const {
  const Int& c0 = c_[0];
  if (c0 != 1 && c0 != -1) throw Error(ErrorKind::NonUnitConstant, "series inverse needs constant term +-1");
  PowerSeriesZ r(order());
  r.c_[0] = c0;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 1; j <= i; ++j) {
      if (sgn(c_[j]) != 0) mpz_addmul(acc.get_mpz_t(), c_[j].get_mpz_t(), r.c_[i - j].get_mpz_t());
    }
    r.c_[i] = -acc * c0;
  }
  return r;
}

PowerSeriesZ operator*(const PowerSeriesZ& a, const PowerSeriesZ& b) {
  const long N = std::min(a.order(), b.order());
  std::vector<Int> x(a.c_.begin(), a.c_.begin() + N), y(b.c_.begin(), b.c_.begin() + N);
  std::vector<Int> p = mul_coeffs(x, y);
  p.resize(static_cast<std::size_t>(N));
  return PowerSeriesZ(N, std::move(p));
}

PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b) {
  const long N = std::min(a.order(), b.order());
  PowerSeriesZ r(N);
  for (long i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

long PowerSeriesZ::first_difference(const PowerSeriesZ& o) const {
  const std::size_t N = std::min(c_.size(), o.c_.size());
  for (std::size_t i = 0; i < N; ++i) {
    if (c_[i] != o.c_[i]) return static_cast<long>(i);
  }
  return c_.size() == o.c_.size() ? -1 : static_cast<long>(N);
}

namespace {

// (q^t; q^t)_inf = sum_j (-1)^j q^(t j(3j-1)/2) over j in Z (Euler's
// pentagonal theorem): the nonzero exponents below `order` with their signs.
std::vector<std::pair<long, int>> pentagonal_terms(long t, long order) {
  std::vector<std::pair<long, int>> out;
  for (long j = 1;; ++j) {
    const long e1 = t * (j * (3 * j - 1) / 2);
    const long e2 = t * (j * (3 * j + 1) / 2);
    if (e1 >= order) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    out.emplace_back(e1, sign);
    if (e2 < order) out.emplace_back(e2, sign);
  }
  return out;
}

// s *= (q^t; q^t)_inf^e through the sparse pentagonal series: O(order^1.5)
// per unit of |e| instead of O(order^2).
void mul_euler_power(std::vector<Int>& c, long t, int e) {
  const long N = static_cast<long>(c.size());
  const auto terms = pentagonal_terms(t, N);
  for (int r = 0; r < std::abs(e); ++r) {
    if (e > 0) {
      for (long i = N - 1; i >= 1; --i) {
        for (const auto& [ex, sg] : terms) {
          if (ex > i) break;
          if (sg > 0) {
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - ex)];
          } else {
            c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - ex)];
          }
        }
      }
    } else {
      for (long i = 1; i < N; ++i) {
        for (const auto& [ex, sg] : terms) {
          if (ex > i) break;
          if (sg > 0) {
            c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - ex)];
          } else {
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - ex)];
          }
        }
      }
    }
  }
}

}  // namespace

PowerSeriesZ series_from_product(const std::vector<InfiniteFactor>& factors, long order) {
  PowerSeriesZ s = PowerSeriesZ::one(order);
  std::vector<Int> c = s.coeffs();
  for (const auto& f : factors) {
    if (f.start < 1) {
      throw Error(ErrorKind::DivergentProduct, "infinite factor must start at q^1 or higher");
    }
    if (f.step < 1) throw Error(ErrorKind::InvalidArgument, "infinite factor step must be >= 1");
    if (f.sign == 1 && f.start == f.step) {
      mul_euler_power(c, f.step, f.mult);
      continue;
    }
    PowerSeriesZ part(order, std::move(c));
    for (long m = f.start; m < order; m += f.step) part.mul_binomial_power(f.sign, m, f.mult);
    c = part.coeffs();
  }
  return PowerSeriesZ(order, std::move(c));
}

PowerSeriesZ series_from_product_reference(const std::vector<InfiniteFactor>& factors, long order) {
  PowerSeriesZ s = PowerSeriesZ::one(order);
  for (const auto& f : factors) {
    if (f.start < 1) {
      throw Error(ErrorKind::DivergentProduct, "infinite factor must start at q^1 or higher");
    }
    if (f.step < 1) throw Error(ErrorKind::InvalidArgument, "infinite factor step must be >= 1");
    for (long m = f.start; m < order; m += f.step) s.mul_binomial_power(f.sign, m, f.mult);
  }
  return s;
}

namespace {

// A summand normalized for series expansion:
//   scalar * q^shift * prod(num factors) / prod(unit den factors)
struct SeriesTerm {
  Int scalar = 1;
  long shift = 0;
  std::vector<LinearFactor> num;  // mult > 0
  std::vector<LinearFactor> den;  // exp >= 1, stored with positive mult
  bool zero = false;
  long low = 0;
};

SeriesTerm normalize_term(const QProduct& p) {
  SeriesTerm st;
  st.scalar = p.scalar;
  st.shift = p.q_exp;
  for (const auto& f : p.factors) {
    if (f.mult > 0) {
      if (f.exp == 0 && f.sign == 1) st.zero = true;
      st.num.push_back(f);
      continue;
    }
    if (f.exp == 0) {
      if (f.sign == 1) throw Error(ErrorKind::SingularSpecialization, "denominator factor (1 - q^0)");
      throw Error(ErrorKind::NonUnitConstant, "denominator factor 2 is not a unit over Z");
    }
    const int mag = -f.mult;
    if (f.exp < 0) {
      // 1/(1 - s q^m) = -s q^{-m} / (1 - s q^{-m})
      for (int i = 0; i < mag; ++i) st.scalar *= -f.sign;
      st.shift -= f.exp * mag;
      st.den.push_back({f.sign, -f.exp, mag});
    } else {
      st.den.push_back({f.sign, f.exp, mag});
    }
  }
  long low = st.shift;
  for (const auto& f : st.num) {
    if (f.exp < 0) low += f.exp * f.mult;
  }
  st.low = low;
  return st;
}

}  // namespace

long term_low_exponent(const TermSpec& t, long k) { return normalize_term(term_product(t, k)).low; }

PowerSeriesZ series_from_sum(const TermSpec& t, long order, long shift) {
  PowerSeriesZ out(order);
  const long cap = 4 * order + 64;
  long prev_low = 0;
  for (long k = 0;; ++k) {
    if (k > cap) {
      throw Error(ErrorKind::NotSummableAsSeries, "summand valuations do not grow past order " +
                                                      std::to_string(order));
    }
    SeriesTerm st = normalize_term(term_product(t, k));
    if (st.zero) break;
    const long low = st.low + shift;
    if (low >= order) {
      if (k > 0 && low > prev_low) break;
      prev_low = low;
      continue;
    }
    prev_low = low;

    // Numerator: negative-exponent factors exactly, then positive ones
    // truncated (they only raise exponents).
    const long base = st.shift + shift;  // absolute exponent = base + local exponent
    LaurentPoly num(st.scalar);
    for (const auto& f : st.num) {
      if (f.exp < 0) {
        for (int i = 0; i < f.mult; ++i) num.mul_binomial(f.sign, f.exp);
      }
    }
    const long bound = order - base;
    num = num.truncated(bound);
    for (const auto& f : st.num) {
      if (f.exp < 0) continue;
      for (int i = 0; i < f.mult; ++i) {
        num.mul_binomial(f.sign, f.exp);
        num = num.truncated(bound);
      }
    }
    if (num.is_zero()) continue;
    // Dense window [lo, bound) in local exponents; divide by unit factors.
    const long lo = num.min_exp();
    if (lo >= bound) continue;
    PowerSeriesZ w(bound - lo);
    for (std::size_t i = 0; i < num.size(); ++i) w[static_cast<long>(i)] = num.coeffs()[i];
    for (const auto& f : st.den) w.mul_binomial_power(f.sign, f.exp, -f.mult);
    for (long i = 0; i < w.order(); ++i) {
      const long e = base + lo + i;
      if (sgn(w[i]) == 0) continue;
      if (e < 0) {
        throw Error(ErrorKind::NotSummableAsSeries,
                    "negative exponent " + std::to_string(e) + " survives; increase the shift");
      }
      out[e] += w[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

TermSpec make_s1(int sign_k, long lin) {
  TermSpec t;
  t.factors = {{1, 1, 4, 2}, {1, 4, 4, -2}};
  t.sign_k = sign_k;
  t.lin_coef = lin;
  return t;
}

TermSpec make_s2(int sign_k, long lin) {
  TermSpec t;
  t.factors = {{1, 1, 2, 2}, {1, 2, 4, 1}, {1, 2, 2, -2}, {1, 4, 4, -1}};
  t.sign_k = sign_k;
  t.lin_coef = lin;
  return t;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"S1", "S1inv", "S2", "S3", "S4", "S5",
                                                 "S6", "S7",    "S8", "S9", "S10"};
  return names;
}

TermSpec preset(std::string_view name) {
  if (name == "S1") return make_s1(1, 2);
  if (name == "S1inv") return make_s1(1, 4);
  if (name == "S2") return make_s2(1, 2);
  if (name == "S3") return make_s1(-1, 3);
  if (name == "S4") return make_s1(-1, 1);
  if (name == "S5") return make_s2(-1, 1);
  if (name == "S6") {
    TermSpec t;
    t.factors = {{1, 1, 2, 2}, {1, 2, 2, -1}, {1, 4, 4, -1}};
    t.lin_coef = 2;
    return t;
  }
  if (name == "S7" || name == "S8") {
    // (1 + q^{4k+1}) (q^2;q^4)_k^3 / (q^4;q^4)_k^3 q^k, S7 divided by (1 + q)
    TermSpec t;
    t.factors = {{1, 2, 4, 3}, {1, 4, 4, -3}};
    t.lin_coef = 1;
    t.affine = {{1, 4, 1, 1}};
    if (name == "S7") t.affine.push_back({1, 0, 1, -1});
    return t;
  }
  if (name == "S9") {
    TermSpec t;
    t.factors = {{1, 2, 4, 3}, {1, 4, 4, -3}};
    t.sign_k = -1;
    t.lin_coef = 1;
    t.affine = {{-1, 4, 1, 1}, {-1, 0, 1, -1}};
    return t;
  }
  if (name == "S10") {
    // (-q)^{k^2} = (-1)^k q^{k^2}
    TermSpec t;
    t.factors = {{1, 1, 2, 3}, {1, 2, 2, -3}};
    t.sign_k = -1;
    t.quad_coef = 1;
    t.affine = {{-1, 4, 1, 1}, {-1, 0, 1, -1}};
    return t;
  }
  throw Error(ErrorKind::UnknownPreset, std::string(name));
}

}  // namespace qcong
