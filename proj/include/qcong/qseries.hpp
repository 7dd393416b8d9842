#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcong/local_ring.hpp"

namespace qcong {

/// (sign q^a_exp; q^step)_k raised to mult (mult < 0: denominator).
struct PochFactor {
  int sign = 1;
  long a_exp = 0;
  long step = 1;
  int mult = 1;
};

/// (1 + sign q^(c k + d))^mult, mult in {-1, +1}.
struct AffineFactor {
  int sign = 1;
  long c = 0;
  long d = 0;
  int mult = 1;
};

/// One q-hypergeometric summand:
///   prod (factors)_k * sign_k^k * q^(quad_coef k^2 + lin_coef k) * prod affine(k)
struct TermSpec {
  std::vector<PochFactor> factors;
  int sign_k = 1;
  long quad_coef = 0;
  long lin_coef = 0;
  std::vector<AffineFactor> affine;

  /// Throws InvalidArgument on malformed specs, e.g. a denominator affine
  /// factor with c*k + d < 1 somewhere in [0, upper].
  void validate(long upper) const;

  nlohmann::json to_json() const;
  static TermSpec from_json(const nlohmann::json& j);
};

/// (1 - sign q^exp)^mult
struct LinearFactor {
  int sign = 1;
  long exp = 0;
  int mult = 1;
};

/// scalar * q^q_exp * prod (1 - sign q^exp)^mult: a finite product of q-shifted
/// factorials, the common shape of every term ratio and right-hand side.
struct QProduct {
  Int scalar = 1;
  long q_exp = 0;
  std::vector<LinearFactor> factors;

  /// Appends (sign q^a; q^step)_len ^ mult.
  QProduct& pochhammer(int sign, long a, long step, long len, int mult = 1);
  QProduct& factor(int sign, long exp, int mult = 1);
  QProduct& times(const QProduct& o);

  RatPoly to_ratpoly() const;
  LocalFraction to_local(const LocalRing& ring) const;
};

/// (sign q^a_exp; q^step)_k, ignoring p.mult.
LaurentPoly pochhammer(const PochFactor& p, long k);

/// The k-th summand as a product.
QProduct term_product(const TermSpec& t, long k);
/// term(j+1) / term(j).
QProduct term_ratio(const TermSpec& t, long j);

inline constexpr long kExactDegreeGuard = 1'000'000;

/// sum_{k=0}^{upper} term_k over a single common denominator.
RatPoly hyper_sum_exact(const TermSpec& t, long upper);

/// Same sum in the local ring at Phi_n; the workhorse behind hyper_sum_mod.
LocalFraction hyper_sum_local(const TermSpec& t, long upper, const LocalRing& ring);

/// Image of the truncated sum in Q[q]/(Phi_n^k). Throws PoleAtCyclotomic if
/// some summand has negative Phi_n-adic valuation.
QuotientElem hyper_sum_mod(const TermSpec& t, long upper, long n, int k);

/// Integer power series truncated at order N (coefficients of q^0..q^(N-1)).
class PowerSeriesZ {
 public:
  explicit PowerSeriesZ(long order);
  PowerSeriesZ(long order, std::vector<Int> coeffs);
  static PowerSeriesZ one(long order);

  long order() const { return static_cast<long>(c_.size()); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& operator[](long i) const { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](long i) { return c_[static_cast<std::size_t>(i)]; }

  /// this *= (1 - sign q^m)^e, m >= 1, e of either sign.
  void mul_binomial_power(int sign, long m, int e);
  PowerSeriesZ inverse() const;
  friend PowerSeriesZ operator*(const PowerSeriesZ& a, const PowerSeriesZ& b);
  friend PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b);
  friend bool operator==(const PowerSeriesZ& a, const PowerSeriesZ& b) { return a.c_ == b.c_; }
  /// Index of the first differing coefficient, or -1.
  long first_difference(const PowerSeriesZ& o) const;

 private:
  std::vector<Int> c_;
};

/// (sign q^start; q^step)_infinity ^ mult
struct InfiniteFactor {
  int sign = 1;
  long start = 1;
  long step = 1;
  int mult = 1;
};

/// Factors of the form (q^t; q^t)_inf expand through Euler's pentagonal
/// series; the rest factor by factor.
PowerSeriesZ series_from_product(const std::vector<InfiniteFactor>& factors, long order);
/// Factor-by-factor expansion of every factor; the oracle for the above.
PowerSeriesZ series_from_product_reference(const std::vector<InfiniteFactor>& factors, long order);

/// q^shift * sum_k term_k as a power series to the given order. The shift
/// lets Laurent-valued sums (finitely many negative exponents) be compared.
PowerSeriesZ series_from_sum(const TermSpec& t, long order, long shift = 0);

/// Lowest q-exponent of the k-th summand (ignoring vanishing numerators).
long term_low_exponent(const TermSpec& t, long k);

/// Named summands: S1, S1inv, S2, ..., S10.
TermSpec preset(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace qcong
