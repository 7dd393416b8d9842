#pragma once

#include <vector>

#include "qcong/quotient.hpp"

namespace qcong {

/// Truncated expansion around a primitive n-th root of unity.
///
/// Q[q]/(Phi_n^k) is isomorphic to K[t]/(t^k) with K = Q(zeta), via
/// f -> f(zeta + t). Elements of K are stored as integer vectors of length n
/// in Z[x]/(x^n - 1) (x -> zeta is a ring map), so multiplying by a power of
/// q is a rotation and every factor (1 - s q^m) costs O(k^2 n) integer ops.
/// Nothing is reduced modulo Phi_n until a zero test or conversion.
class LocalRing {
 public:
  using Coeff = std::vector<Int>;    // length n
  using Series = std::vector<Coeff>;  // length k, coefficient of t^i at [i]

  LocalRing(long n, int k);

  long n() const { return n_; }
  int k() const { return k_; }

  Series zero() const;
  Series one() const;
  Series constant(const Int& c) const;

  /// (1 - sign q^exp) vanishes identically as a polynomial (exp == 0, sign == 1).
  static bool is_null_factor(int sign, long exp) { return exp == 0 && sign == 1; }
  /// (1 - sign q^exp) vanishes at zeta (then to order exactly 1).
  bool vanishes_at_root(int sign, long exp) const;

  /// s *= unit part of (1 - sign q^exp); returns the t-adic valuation
  /// (0 or 1) that was factored out. Null factors are the caller's concern.
  int mul_binomial(Series& s, int sign, long exp) const;
  /// s *= q^e
  void mul_q_power(Series& s, long e) const;
  void mul_scalar(Series& s, const Int& c) const;
  void negate(Series& s) const;
  /// acc += t^shift * s (terms at t^k and beyond are dropped)
  void add_shifted(Series& acc, const Series& s, int shift) const;
  Series mul(const Series& a, const Series& b) const;
  Series sub(const Series& a, const Series& b) const;
  /// t^shift * s, truncated.
  Series shifted(const Series& s, int shift) const;

  /// Every t-coefficient is zero in K.
  bool is_zero(const Series& s) const;
  /// Image of a coefficient in K as a polynomial mod Phi_n.
  QPoly value(const Coeff& c) const;
  /// Expansion of an arbitrary Laurent polynomial at zeta.
  Series expand(const LaurentPoly& f) const;
  /// Polynomial f with deg f < k*phi(n) whose expansion is s (exact inverse
  /// of expand() on Q[q]/(Phi_n^k)).
  QPoly reconstruct(const Series& s) const;

 private:
  struct Term {
    Int coef;
    long exp;  // already reduced mod n
  };
  using SparseSeries = std::vector<std::vector<Term>>;

  long reduce_exp(long e) const;
  void mul_sparse(Series& s, const SparseSeries& f) const;

  long n_;
  int k_;
};

/// t^val * num / den with den a unit (den(0) != 0 in K).
struct LocalFraction {
  int val = 0;
  LocalRing::Series num;
  LocalRing::Series den;
};

LocalFraction local_one(const LocalRing& ring);
/// f *= (1 - sign q^exp)^mult, bookkeeping the valuation symbolically.
/// A null factor in the numerator zeroes f; in the denominator it throws
/// SingularSpecialization.
void mul_factor(const LocalRing& ring, LocalFraction& f, int sign, long exp, int mult);
/// a == b modulo t^k (cross-multiplied). Throws PoleAtCyclotomic if either
/// side has negative valuation.
bool local_equal(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b);
LocalFraction local_sub(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b);
LocalFraction local_mul(const LocalRing& ring, const LocalFraction& a, const LocalFraction& b);
/// Image in Q[q]/(Phi_n^k).
QuotientElem to_quotient(const LocalRing& ring, const LocalFraction& f);

}  // namespace qcong
