#include "qcong/modforms.hpp"

#include <cmath>
#include <string>

#include "qcong/error.hpp"
#include "qcong/primes.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

std::string_view to_string(FormId f) { return f == FormId::f1 ? "f1" : "f2"; }

FormId form_from_string(std::string_view s) {
  if (s == "f1") return FormId::f1;
  if (s == "f2") return FormId::f2;
  throw Error(ErrorKind::InvalidArgument, "unknown form '" + std::string(s) + "' (expected f1 or f2)");
}

CoeffTable eta_coeffs(FormId form, long N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "coefficient count must be >= 1");
  if (N > kEtaGuard) throw Error(ErrorKind::TooLarge, "eta expansion limited to 10^6 coefficients");
  std::vector<InfiniteFactor> factors;
  if (form == FormId::f1) {
    factors = {{1, 4, 4, 6}};
  } else {
    factors = {{1, 1, 1, 2}, {1, 2, 2, 1}, {1, 4, 4, 1}, {1, 8, 8, 2}};
  }
  // the leading q shifts q^(n-1) to q^n
  const PowerSeriesZ s = series_from_product(factors, N);
  CoeffTable t;
  t.form = form;
  t.N = N;
  t.a.assign(static_cast<std::size_t>(N) + 1, 0);
  for (long n = 1; n <= N; ++n) t.a[static_cast<std::size_t>(n)] = s[n - 1].get_si();
  return t;
}

std::optional<std::pair<long, long>> quad_rep(long p, int d) {
  if (d != 1 && d != 2) throw Error(ErrorKind::InvalidArgument, "quad_rep supports d = 1 or 2");
  for (long b = 0; d * b * b < p; ++b) {
    const long rest = p - d * b * b;
    const long a = std::lround(std::sqrt(static_cast<double>(rest)));
    for (long c = std::max(1L, a - 1); c <= a + 1; ++c) {
      if (c * c != rest) continue;
      if (d == 1 && c % 2 == 0) continue;
      return std::make_pair(c, b);
    }
  }
  return std::nullopt;
}

long closed_form_a(FormId form, long p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::OutOfDomain, "closed form needs an odd prime");
  if (form == FormId::f1) {
    if (p % 4 == 3) return 0;
    const auto r = quad_rep(p, 1);
    return 2 * (r->first * r->first - r->second * r->second);
  }
  if (p % 8 == 5 || p % 8 == 7) return 0;
  const auto r = quad_rep(p, 2);
  return 2 * (r->first * r->first - 2 * r->second * r->second);
}

NumericValue l_value(FormId form, double s, long N) {
  if (s < 2) throw Error(ErrorKind::OutOfDomain, "l_value needs s >= 2");
  const CoeffTable t = eta_coeffs(form, N);
  std::vector<double> partial(static_cast<std::size_t>(N) + 1, 0.0);
  double acc = 0;
  for (long n = 1; n <= N; ++n) {
    acc += static_cast<double>(t.at(n)) / std::pow(static_cast<double>(n), s);
    partial[static_cast<std::size_t>(n)] = acc;
  }
  double excursion = 0;
  for (long m = N / 2 + 1; m <= N; ++m) {
    excursion = std::max(excursion, std::abs(partial[static_cast<std::size_t>(m)] - acc));
  }
  return {acc, excursion};
}

NumericValue dirichlet_L_chi4(double s, long N) {
  if (s <= 1) throw Error(ErrorKind::OutOfDomain, "dirichlet_L_chi4 needs s > 1");
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be >= 0");
  // summed from the small end for accuracy
  double acc = 0;
  for (long m = N; m >= 0; --m) {
    const double term = 1.0 / std::pow(static_cast<double>(2 * m + 1), s - 1);
    acc += (m % 2 == 0) ? term : -term;
  }
  return {acc, 1.0 / std::pow(static_cast<double>(2 * N + 3), s - 1)};
}

}  // namespace qcong
