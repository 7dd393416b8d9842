#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace qcong {

using Int = mpz_class;
using Rational = mpq_class;

/// Integer-coefficient Laurent polynomial in q, stored densely:
/// coeffs()[i] is the coefficient of q^(min_exp() + i).
///
/// Canonical form: the first and last stored coefficients are nonzero; zero
/// is the empty vector with min_exp() == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Int& constant);
  LaurentPoly(long min_exp, std::vector<Int> coeffs);

  static LaurentPoly monomial(const Int& c, long exp);
  /// 1 - sign*q^exp
  static LaurentPoly binomial(int sign, long exp);

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return min_exp_; }
  /// Largest exponent; meaningless for zero.
  long max_exp() const { return min_exp_ + static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(long exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& s);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
  }

  /// Multiply in place by (1 - sign*q^exp); O(size).
  void mul_binomial(int sign, long exp);
  /// q^s * this
  LaurentPoly shifted(long s) const;
  /// Drops every term with exponent >= bound.
  LaurentPoly truncated(long bound) const;
  /// q -> q^{-1}
  LaurentPoly inverted() const;
  /// q -> q^b, b >= 1
  LaurentPoly dilated(long b) const;
  /// Gcd of the coefficients (non-negative); zero for the zero polynomial.
  Int content() const;

  std::complex<double> eval(std::complex<double> q) const;
  Int eval(const Int& q) const;  // requires min_exp() >= 0

  /// Sparse text form, e.g. "1 - q^3 + 2*q^5".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);
  /// Array of [coefficient-string, exponent] pairs, exponents ascending.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<Int> c_;
};

/// Dense coefficient-vector products. Schoolbook below the threshold,
/// Karatsuba above it.
std::vector<Int> mul_coeffs(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> mul_coeffs_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b);
std::size_t karatsuba_threshold();
void set_karatsuba_threshold(std::size_t terms);

struct DivRem {
  LaurentPoly quot;
  LaurentPoly rem;
};

/// Division by a monic ordinary polynomial. Both operands need min_exp >= 0;
/// throws NonMonicModulus for zero or non-monic m.
DivRem divrem(const LaurentPoly& a, const LaurentPoly& m);

}  // namespace qcong
