#pragma once

#include <limits>
#include <string>

#include "qcong/cyclotomic.hpp"
#include "qcong/qpoly.hpp"

namespace qcong {

/// Element Phi_n(q)^val * unit of Q[q] / (Phi_n(q)^k).
///
/// Canonical form: either val == kInfinite (the zero element, unit empty) or
/// val < k with unit reduced modulo Phi_n^(k - val) and unit mod Phi_n != 0.
/// Two elements with the same (n, k) are equal iff their (val, unit) agree.
class QuotientElem {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  QuotientElem(long n, int k);  // zero
  /// Reduces p modulo Phi_n^k and extracts the valuation.
  QuotientElem(long n, int k, const QPoly& p);

  static QuotientElem one(long n, int k);
  /// q^e, negative e through inv(q).
  static QuotientElem q_power(long n, int k, long e);

  long n() const { return n_; }
  int k() const { return k_; }
  int valuation() const { return val_; }
  bool is_zero() const { return val_ == kInfinite; }
  bool is_unit() const { return val_ == 0; }
  const QPoly& unit_part() const { return unit_; }

  QuotientElem& operator+=(const QuotientElem& o);
  QuotientElem& operator-=(const QuotientElem& o);
  QuotientElem& operator*=(const QuotientElem& o);
  QuotientElem operator-() const;
  friend QuotientElem operator+(QuotientElem a, const QuotientElem& b) { return a += b; }
  friend QuotientElem operator-(QuotientElem a, const QuotientElem& b) { return a -= b; }
  friend QuotientElem operator*(QuotientElem a, const QuotientElem& b) { return a *= b; }
  friend bool operator==(const QuotientElem& a, const QuotientElem& b);

  /// Inverse of a unit; throws DenominatorNotCoprime when val > 0.
  QuotientElem inverse() const;

  /// Representative of degree < k*phi(n): Phi_n^val * unit mod Phi_n^k.
  QPoly representative() const;
  /// Representative with denominators cleared, content removed and leading
  /// coefficient positive; comparable across runs.
  LaurentPoly canonical_residue() const;

 private:
  void normalize(QPoly p, int base_val);
  void require_same_ring(const QuotientElem& o) const;

  long n_;
  int k_;
  int val_ = kInfinite;
  QPoly unit_;
};

/// Image of f (a Laurent polynomial) in Q[q]/(Phi_n^k).
QuotientElem quotient_embed(const LaurentPoly& f, long n, int k);
/// Image of num/den; throws DenominatorNotCoprime when Phi_n | den.
QuotientElem quotient_embed(const RatPoly& f, long n, int k);

/// a == b in Q[q]/(Phi_n^k); throws MismatchedModulus for different rings.
bool congruent(const QuotientElem& a, const QuotientElem& b);

/// Phi_n(q) and its powers as Q-polynomials, cached.
const QPoly& phi_q(long n, int k);

}  // namespace qcong
