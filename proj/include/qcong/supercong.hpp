#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcong/laurent_poly.hpp"

namespace qcong {

using BigRational = Rational;

/// residue = x mod p^m, 0 <= residue < p^m.
struct PadicValue {
  long p = 0;
  int m = 0;
  Int residue = 0;

  friend bool operator==(const PadicValue& a, const PadicValue& b) {
    return a.p == b.p && a.m == b.m && a.residue == b.residue;
  }
};

/// num * den^-1 mod p^m; throws NotPAdicallyIntegral when p | den.
PadicValue rational_mod(const BigRational& x, long p, int m);
/// Integer x mod p^m.
PadicValue integer_mod(const Int& x, long p, int m);

/// (1/2)_k^3 / k!^3 for k = 0..m via the ratio ((2k+1)/(2k+2))^3.
std::vector<BigRational> half_cubed_terms(long m);

/// sum_{k=0}^{m} (4k+1) (1/2)_k^3 / k!^3 (-1)^k
BigRational bauer_partial(long m);
/// sum_{k=0}^{m} (1/2)_k^3 / k!^3 * sign^k
BigRational half_cubed_partial(long m, int sign);
/// (a)_m^2 / m!^2
BigRational pochhammer_ratio_squared(const BigRational& a, long m);

struct B2Result {
  bool full = false;  // truncation at p - 1
  bool half = false;  // truncation at (p - 1) / 2
};
/// Both truncations of the Bauer sum are (-1)^((p-1)/2) p mod p^3.
B2Result check_B2(long p);

/// A main congruence plus an optional auxiliary branch congruence.
struct BranchResult {
  bool sum = false;
  std::optional<bool> branch;
  bool ok() const { return sum && branch.value_or(true); }
};
/// sum_{k<p} (1/2)_k^3/k!^3 = a1(p) mod p^2; for p = 1 mod 4 also
/// a1(p) = (1/2)_m^2/m!^2 mod p^2 with m = (p-1)/4. The coefficient defaults
/// to the closed form; pass an eta-product coefficient to check against it.
BranchResult check_A2_style(long p, std::optional<long> coefficient = std::nullopt);
/// (-1)^((p-1)/2) sum_{k<p} (1/2)_k^3/k!^3 (-1)^k = a2(p) mod p^2; also
/// a2(p) = (1/4)_m^2/m!^2 (m = (p-1)/8) or -1/2 (1/4)_m^2/m!^2
/// (m = (3p-1)/8) mod p^2 when the index is integral.
BranchResult check_cong2(long p, std::optional<long> coefficient = std::nullopt);

/// Morita's Gamma_p(x) mod p^2 through the integer lift of x mod p^2.
/// Throws NotPAdicallyIntegral when p | den(x).
PadicValue padic_gamma(const BigRational& x, long p);

struct GammaResult {
  bool g1 = false;  // a1(p) = Gamma_p(1/2)^2 / Gamma_p(3/4)^4
  bool g2 = false;  // (-1)^((p-1)/2) sum_{k<p} (1/2)_k^3/k!^3 (-1)^k = Gamma_p(1/2)^2 / (Gamma_p(5/8)^2 Gamma_p(7/8)^2)
  bool applicable1 = false;  // a1(p) != 0
  bool applicable2 = false;  // a2(p) != 0
};
GammaResult check_gamma_congruences(long p);

struct NumericCheck {
  std::string id;
  double value = 0;
  double target = 0;
  double error_estimate = 0;
  double tolerance = 0;
  bool pass() const;
};

/// ids: bauer, H1, H2, Lchi4. Throws InvalidArgument otherwise.
NumericCheck numeric_check(const std::string& id);
std::vector<NumericCheck> numeric_checks();

}  // namespace qcong
