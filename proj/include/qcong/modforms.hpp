#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qcong {

/// f1 = q prod (1 - q^4m)^6;  f2 = q prod (1 - q^m)^2 (1 - q^2m) (1 - q^4m) (1 - q^8m)^2.
enum class FormId { f1, f2 };

std::string_view to_string(FormId f);
/// Throws InvalidArgument for unknown names.
FormId form_from_string(std::string_view s);

/// Fourier coefficients a(1..N) of a form.
struct CoeffTable {
  FormId form = FormId::f1;
  long N = 0;
  std::vector<long> a;  // a[n] for 1 <= n <= N; a[0] unused

  long at(long n) const { return a.at(static_cast<std::size_t>(n)); }
};

inline constexpr long kEtaGuard = 1'000'000;

/// Expands the eta product to q^N. Throws TooLarge past kEtaGuard.
CoeffTable eta_coeffs(FormId form, long N);

/// p = a^2 + d b^2 with a > 0 (odd when d = 1) and b >= 0, by brute force
/// over b; nullopt when p has no such representation.
std::optional<std::pair<long, long>> quad_rep(long p, int d);

/// Closed form of a(p) through quad_rep. Throws OutOfDomain unless p is an
/// odd prime.
long closed_form_a(FormId form, long p);

struct NumericValue {
  double value = 0;
  /// Error estimate (a rigorous bound where stated, else the observed
  /// oscillation of the partial sums).
  double error = 0;
};

/// sum_{n <= N} a(n) / n^s. The series is only conditionally convergent at
/// s = 2, so the error is the largest excursion of the partial sums over
/// (N/2, N] from the final one.
NumericValue l_value(FormId form, double s, long N);

/// sum_{m=0}^{N} (-1)^m / (2m+1)^(s-1) with the alternating-series bound.
NumericValue dirichlet_L_chi4(double s, long N);

}  // namespace qcong
