#pragma once

#include <vector>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Dense ordinary polynomial over Q; c[i] is the coefficient of q^i.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> c);
  /// Requires p.min_exp() >= 0 (or p zero).
  explicit QPoly(const LaurentPoly& p);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long i) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Hasse derivative of order i: sum_e c_e * C(e, i) q^(e - i).
  QPoly hasse(int i) const;

  /// Clears denominators and divides by the integer content; the leading
  /// coefficient is made positive. Zero maps to zero.
  LaurentPoly primitive_part() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct QDivRem {
  QPoly quot;
  QPoly rem;
};

/// Euclidean division over Q; m must be nonzero.
QDivRem divrem(const QPoly& a, const QPoly& m);
QPoly mod(const QPoly& a, const QPoly& m);

/// Inverse of a modulo m over Q via extended Euclid; returns the zero
/// polynomial when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

}  // namespace qcong
