#include "qcong/local_ring.hpp"

#include <algorithm>

#include "qcong/error.hpp"

namespace qcong {

namespace {

// Generalized binomial coefficient C(m, i) for any integer m.
Int binom(long m, int i) {
  Int out;
  Int mm = m;
  mpz_bin_ui(out.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(i));
  return out;
}

}  // namespace

LocalRing::LocalRing(long n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "local ring needs n >= 1, k >= 1");
}

long LocalRing::reduce_exp(long e) const {
  long r = e % n_;
  return r < 0 ? r + n_ : r;
}

LocalRing::Series LocalRing::zero() const {
  return Series(static_cast<std::size_t>(k_), Coeff(static_cast<std::size_t>(n_)));
}

LocalRing::Series LocalRing::one() const { return constant(1); }

LocalRing::Series LocalRing::constant(const Int& c) const {
  Series s = zero();
  s[0][0] = c;
  return s;
}

bool LocalRing::vanishes_at_root(int sign, long exp) const {
  const long r = reduce_exp(exp);
  if (sign == 1) return r == 0;
  return n_ % 2 == 0 && r == n_ / 2;
}

void LocalRing::mul_sparse(Series& s, const SparseSeries& f) const {
  const std::size_t n = static_cast<std::size_t>(n_);
  Series out = zero();
  for (int j = 0; j < k_; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Coeff& src = s[static_cast<std::size_t>(j - i)];
      Coeff& dst = out[static_cast<std::size_t>(j)];
      for (const Term& term : f[static_cast<std::size_t>(i)]) {
        const std::size_t e = static_cast<std::size_t>(term.exp);
        const bool plus_one = term.coef == 1;
        const bool minus_one = term.coef == -1;
        for (std::size_t p = 0; p < n; ++p) {
          if (sgn(src[p]) == 0) continue;
          std::size_t q = p + e;
          if (q >= n) q -= n;
          if (plus_one) {
            dst[q] += src[p];
          } else if (minus_one) {
            dst[q] -= src[p];
          } else {
            mpz_addmul(dst[q].get_mpz_t(), term.coef.get_mpz_t(), src[p].get_mpz_t());
          }
        }
      }
    }
  }
  s = std::move(out);
}

int LocalRing::mul_binomial(Series& s, int sign, long exp) const {
  // 1 - sign (zeta + t)^m = (1 - sign zeta^m) - sign sum_{i>=1} C(m,i) zeta^(m-i) t^i
  const bool vanishes = vanishes_at_root(sign, exp);
  const int shift = vanishes ? 1 : 0;
  SparseSeries f(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    const int order = i + shift;
    std::vector<Term>& terms = f[static_cast<std::size_t>(i)];
    if (order == 0) {
      terms.push_back({Int(1), 0});
      terms.push_back({Int(-sign), reduce_exp(exp)});
      continue;
    }
    Int c = binom(exp, order);
    if (sgn(c) == 0) continue;
    terms.push_back({-sign * c, reduce_exp(exp - order)});
  }
  mul_sparse(s, f);
  return shift;
}

void LocalRing::mul_q_power(Series& s, long e) const {
  if (e == 0) return;
  if (k_ == 1) {
    const std::size_t r = static_cast<std::size_t>(reduce_exp(e));
    Coeff& c = s[0];
    std::rotate(c.rbegin(), c.rbegin() + static_cast<long>(r), c.rend());
    return;
  }
  // (zeta + t)^e = sum_i C(e,i) zeta^(e-i) t^i
  SparseSeries f(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    Int c = binom(e, i);
    if (sgn(c) != 0) f[static_cast<std::size_t>(i)].push_back({c, reduce_exp(e - i)});
  }
  mul_sparse(s, f);
}

void LocalRing::mul_scalar(Series& s, const Int& c) const {
  for (auto& coeff : s) {
    for (auto& x : coeff) x *= c;
  }
}

void LocalRing::negate(Series& s) const {
  for (auto& coeff : s) {
    for (auto& x : coeff) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

void LocalRing::add_shifted(Series& acc, const Series& s, int shift) const {
  if (shift < 0) throw Error(ErrorKind::PoleAtCyclotomic, "negative t-adic shift");
  for (int i = shift; i < k_; ++i) {
    Coeff& dst = acc[static_cast<std::size_t>(i)];
    const Coeff& src = s[static_cast<std::size_t>(i - shift)];
    for (std::size_t p = 0; p < dst.size(); ++p) dst[p] += src[p];
  }
}

LocalRing::Series LocalRing::shifted(const Series& s, int shift) const {
  Series out = zero();
  add_shifted(out, s, shift);
  return out;
}

LocalRing::Series LocalRing::sub(const Series& a, const Series& b) const {
  Series out = a;
  for (int i = 0; i < k_; ++i) {
    for (std::size_t p = 0; p < out[static_cast<std::size_t>(i)].size(); ++p) {
      out[static_cast<std::size_t>(i)][p] -= b[static_cast<std::size_t>(i)][p];
    }
  }
  return out;
}

LocalRing::Series LocalRing::mul(const Series& a, const Series& b) const {
  const std::size_t n = static_cast<std::size_t>(n_);
  Series out = zero();
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; i + j < k_; ++j) {
      const Coeff& x = a[static_cast<std::size_t>(i)];
      const Coeff& y = b[static_cast<std::size_t>(j)];
      Coeff& dst = out[static_cast<std::size_t>(i + j)];
      for (std::size_t p = 0; p < n; ++p) {
        if (sgn(x[p]) == 0) continue;
        for (std::size_t q = 0; q < n; ++q) {
          std::size_t r = p + q;
          if (r >= n) r -= n;
          mpz_addmul(dst[r].get_mpz_t(), x[p].get_mpz_t(), y[q].get_mpz_t());
        }
      }
    }
  }
  return out;
}

QPoly LocalRing::value(const Coeff& c) const {
  LaurentPoly p(0, c);
  return QPoly(divrem(p, cyclotomic(n_)).rem);
}

bool LocalRing::is_zero(const Series& s) const {
  for (const Coeff& c : s) {
    LaurentPoly p(0, c);
    if (!divrem(p, cyclotomic(n_)).rem.is_zero()) return false;
  }
  return true;
}

LocalRing::Series LocalRing::expand(const LaurentPoly& f) const {
  Series out = zero();
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const Int& c = f.coeffs()[idx];
    if (sgn(c) == 0) continue;
    const long e = f.min_exp() + static_cast<long>(idx);
    for (int i = 0; i < k_; ++i) {
      Int b = binom(e, i);
      if (sgn(b) == 0) continue;
      mpz_addmul(out[static_cast<std::size_t>(i)][static_cast<std::size_t>(reduce_exp(e - i))].get_mpz_t(),
                 c.get_mpz_t(), b.get_mpz_t());
    }
  }
  return out;
}

QPoly LocalRing::reconstruct(const Series& s) const {
  // f = sum_j Phi^j g_j with deg g_j < phi(n); the t^j coefficient of
  // Phi^j g_j at zeta is g_j(zeta) Phi'(zeta)^j.
  const QPoly& phi = phi_q(n_, 1);
  QPoly f;
  QPoly inv_dphi_pow(std::vector<Rational>{Rational(1)});
  QPoly inv_dphi;
  if (k_ > 1) inv_dphi = inverse_mod(mod(phi.hasse(1), phi), phi);
  for (int j = 0; j < k_; ++j) {
    QPoly target = value(s[static_cast<std::size_t>(j)]);
    QPoly have = mod(f.hasse(j), phi);
    QPoly r = target - have;
    if (j > 0) inv_dphi_pow = mod(inv_dphi_pow * inv_dphi, phi);
    QPoly g = mod(r * inv_dphi_pow, phi);
    if (!g.is_zero()) f += g * phi_q(n_, j == 0 ? 0 : j);
  }
  return f;
}

LocalFraction local_one(const LocalRing& ring) { return {0, ring.one(), ring.one()}; }

void mul_factor(const LocalRing& ring, LocalFraction& f, int sign, long exp, int mult) {
  if (LocalRing::is_null_factor(sign, exp)) {
    if (mult < 0) throw Error(ErrorKind::SingularSpecialization, "denominator factor (1 - q^0)");
    if (mult > 0) {
      f.num = ring.zero();
      f.val = 0;
    }
    return;
  }
  for (int i = 0; i < std::abs(mult); ++i) {
    if (mult > 0) {
      f.val += ring.mul_binomial(f.num, sign, exp);
    } else {
      f.val -= ring.mul_binomial(f.den, sign, exp);
    }
  }
}

LocalFraction local_mul(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b) {
  return {a.val + b.val, ring.mul(a.num, b.num), ring.mul(a.den, b.den)};
}

LocalFraction local_sub(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b) {
  const int base = std::min(a.val, b.val);
  LocalRing::Series lhs = ring.shifted(ring.mul(a.num, b.den), a.val - base);
  LocalRing::Series rhs = ring.shifted(ring.mul(b.num, a.den), b.val - base);
  return {base, ring.sub(lhs, rhs), ring.mul(a.den, b.den)};
}

bool local_equal(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b) {
  if (a.val < 0 || b.val < 0) {
    throw Error(ErrorKind::PoleAtCyclotomic,
                "expression has a pole at Phi_" + std::to_string(ring.n()));
  }
  return ring.is_zero(local_sub(ring, a, b).num);
}

QuotientElem to_quotient(const LocalRing& ring, const LocalFraction& f) {
  if (f.val < 0) {
    throw Error(ErrorKind::PoleAtCyclotomic,
                "expression has a pole at Phi_" + std::to_string(ring.n()));
  }
  const long n = ring.n();
  const int k = ring.k();
  if (f.val >= k) return QuotientElem(n, k);
  QuotientElem num(n, k, ring.reconstruct(f.num));
  QuotientElem den(n, k, ring.reconstruct(f.den));
  QuotientElem out = num * den.inverse();
  if (f.val > 0) out *= QuotientElem(n, k, phi_q(n, f.val));
  return out;
}

}  // namespace qcong
