#pragma once

#include <vector>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Phi_n(q) as (q^n - 1) / prod_{d | n, d < n} Phi_d(q), memoized. The
/// cache is safe for concurrent readers; first computation takes a lock.
const LaurentPoly& cyclotomic(long n);

/// Phi_n(q)^k, memoized alongside cyclotomic().
const LaurentPoly& cyclotomic_power(long n, int k);

long euler_phi(long n);

/// n <= N for which prod_{d | n} Phi_d = q^n - 1 or deg Phi_n = phi(n) fails.
struct CyclotomicSuiteResult {
  long checked = 0;
  std::vector<long> failures;
};
/// OpenMP over n (dynamic schedule; Phi_n costs grow with n).
CyclotomicSuiteResult cyclotomic_suite(long N);
/// Single-threaded reference with the same result.
CyclotomicSuiteResult cyclotomic_suite_serial(long N);

/// True iff Phi_n(q)^k divides q^M f for the shift M that makes q^M f an
/// ordinary polynomial.
bool divides_power(const LaurentPoly& f, long n, int k);

/// Largest v <= cap with Phi_n^v | f (after the unit shift). Zero f gives cap.
int cyclotomic_valuation(const LaurentPoly& f, long n, int cap);

/// Lazy rational function num/den; equality is by cross-multiplication.
struct RatPoly {
  LaurentPoly num;
  LaurentPoly den{1};

  RatPoly() = default;
  RatPoly(LaurentPoly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RatPoly(LaurentPoly n, LaurentPoly d);

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.num * b.den == b.num * a.den;
  }
  /// Exact division by the gcd of coefficient contents only (cheap tidy-up).
  RatPoly tidied() const;
};

}  // namespace qcong
