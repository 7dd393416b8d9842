#include "qcong/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "qcong/error.hpp"

namespace qcong {

namespace {

struct Cache {
  std::shared_mutex mutex;
  std::map<long, std::unique_ptr<LaurentPoly>> phi;
  std::map<std::pair<long, int>, std::unique_ptr<LaurentPoly>> powers;
};

Cache& cache() {
  static Cache c;
  return c;
}

LaurentPoly compute_cyclotomic(long n) {
  LaurentPoly f = LaurentPoly::monomial(1, n) - LaurentPoly(1);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    DivRem qr = divrem(f, cyclotomic(d));
    f = std::move(qr.quot);
  }
  return f;
}

}  // namespace

const LaurentPoly& cyclotomic(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
  Cache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.phi.find(n);
    if (it != c.phi.end()) return *it->second;
  }
  auto value = std::make_unique<LaurentPoly>(compute_cyclotomic(n));
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.phi.try_emplace(n, std::move(value));
  return *it->second;
}

const LaurentPoly& cyclotomic_power(long n, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative cyclotomic power");
  Cache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.powers.find({n, k});
    if (it != c.powers.end()) return *it->second;
  }
  LaurentPoly p(1);
  const LaurentPoly& phi = cyclotomic(n);
  for (int i = 0; i < k; ++i) p *= phi;
  auto value = std::make_unique<LaurentPoly>(std::move(p));
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.powers.try_emplace({n, k}, std::move(value));
  return *it->second;
}

namespace {

bool suite_holds(long n) {
  LaurentPoly prod(1);
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) prod *= cyclotomic(d);
  }
  return prod == LaurentPoly::monomial(1, n) - LaurentPoly(1) && cyclotomic(n).max_exp() == euler_phi(n);
}

}  // namespace

CyclotomicSuiteResult cyclotomic_suite(long N) {
  std::vector<char> ok(static_cast<std::size_t>(std::max(N, 0L)) + 1, 1);
#pragma omp parallel for schedule(dynamic, 4)
  for (long n = 1; n <= N; ++n) ok[static_cast<std::size_t>(n)] = suite_holds(n) ? 1 : 0;
  CyclotomicSuiteResult r;
  for (long n = 1; n <= N; ++n) {
    ++r.checked;
    if (!ok[static_cast<std::size_t>(n)]) r.failures.push_back(n);
  }
  return r;
}

CyclotomicSuiteResult cyclotomic_suite_serial(long N) {
  CyclotomicSuiteResult r;
  for (long n = 1; n <= N; ++n) {
    ++r.checked;
    if (!suite_holds(n)) r.failures.push_back(n);
  }
  return r;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int cyclotomic_valuation(const LaurentPoly& f, long n, int cap) {
  if (f.is_zero()) return cap;
  LaurentPoly g = f.shifted(-f.min_exp());
  const LaurentPoly& phi = cyclotomic(n);
  int v = 0;
  while (v < cap) {
    DivRem qr = divrem(g, phi);
    if (!qr.rem.is_zero()) break;
    g = std::move(qr.quot);
    ++v;
  }
  return v;
}

bool divides_power(const LaurentPoly& f, long n, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "divides_power needs k >= 1");
  return cyclotomic_valuation(f, n, k) >= k;
}

RatPoly::RatPoly(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "RatPoly with zero denominator");
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RatPoly RatPoly::tidied() const {
  Int g = num.content();
  Int h = den.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
  if (g <= 1) return *this;
  auto divided = [&g](const LaurentPoly& p) {
    std::vector<Int> c = p.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return LaurentPoly(p.min_exp(), std::move(c));
  };
  return {divided(num), divided(den)};
}

}  // namespace qcong
