#include "qcong/qpoly.hpp"

#include <utility>

#include "qcong/error.hpp"

namespace qcong {

QPoly::QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

QPoly::QPoly(const LaurentPoly& p) {
  if (p.is_zero()) return;
  if (p.min_exp() < 0) throw Error(ErrorKind::InvalidArgument, "QPoly from Laurent polynomial");
  c_.resize(static_cast<std::size_t>(p.max_exp() + 1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    c_[static_cast<std::size_t>(p.min_exp()) + i] = Rational(p.coeffs()[i]);
  }
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Multiply over Z after clearing denominators; far cheaper than mpq products.
  Int da = 1, db = 1;
  for (const auto& x : a.c_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : b.c_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), x.get_den_mpz_t());
  auto scaled = [](const std::vector<Rational>& v, const Int& d) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = v[i].get_num() * (d / v[i].get_den());
    }
    return out;
  };
  std::vector<Int> prod = mul_coeffs(scaled(a.c_, da), scaled(b.c_, db));
  const Int den = da * db;
  std::vector<Rational> c(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    c[i] = Rational(prod[i], den);
    c[i].canonicalize();
  }
  return QPoly(std::move(c));
}

QPoly QPoly::hasse(int i) const {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative Hasse derivative order");
  if (static_cast<long>(i) > degree()) return {};
  std::vector<Rational> c(c_.size() - static_cast<std::size_t>(i));
  Int binom;
  for (std::size_t e = static_cast<std::size_t>(i); e < c_.size(); ++e) {
    mpz_bin_uiui(binom.get_mpz_t(), e, static_cast<unsigned long>(i));
    c[e - static_cast<std::size_t>(i)] = c_[e] * Rational(binom);
  }
  return QPoly(std::move(c));
}

LaurentPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  Int den = 1;
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].get_num() * (den / c_[i].get_den());
  LaurentPoly p(0, std::move(c));
  Int g = p.content();
  if (sgn(p.coeffs().back()) < 0) g = -g;
  std::vector<Int> out = p.coeffs();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return LaurentPoly(p.min_exp(), std::move(out));
}

QDivRem divrem(const QPoly& a, const QPoly& m) {
  if (m.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.degree() < m.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  const Rational inv_lead = 1 / mc.back();
  const bool monic = mc.back() == 1;
  std::vector<Rational> q(r.size() - dm);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational& lead = r[k + dm];
    if (sgn(lead) == 0) continue;
    q[k] = monic ? lead : lead * inv_lead;
    for (std::size_t j = 0; j < dm; ++j) {
      if (sgn(mc[j]) != 0) r[k + j] -= q[k] * mc[j];
    }
    lead = 0;
  }
  r.resize(dm);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly mod(const QPoly& a, const QPoly& m) { return divrem(a, m).rem; }

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Invariant: s_i * a = r_i (mod m).
  QPoly r0 = m, r1 = mod(a, m);
  QPoly s0, s1(std::vector<Rational>{Rational(1)});
  while (!r1.is_zero()) {
    // keep r1 monic to slow coefficient growth
    Rational lead = r1.coeffs().back();
    if (lead != 1) {
      Rational inv = 1 / lead;
      r1 *= inv;
      s1 *= inv;
    }
    auto [q, r] = divrem(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return {};
  Rational inv = 1 / r0.coeffs()[0];
  s0 *= inv;
  return mod(s0, m);
}

}  // namespace qcong
