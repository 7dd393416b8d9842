#include "qcong/supercong.hpp"

#include <cmath>
#include <numbers>

#include "qcong/error.hpp"
#include "qcong/modforms.hpp"
#include "qcong/primes.hpp"

namespace qcong {

namespace {

Int prime_power(long p, int m) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
  return r;
}

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::OutOfDomain, "expected an odd prime, got " + std::to_string(p));
}

bool congruent_mod(const BigRational& x, const BigRational& y, long p, int m) {
  return rational_mod(x - y, p, m).residue == 0;
}

// Euler's transform of an alternating series via repeated averaging of the
// trailing partial sums; the error estimate is the change made by the last
// averaging level.
struct Accelerated {
  double value;
  double error;
};

double averaged(const std::vector<double>& partial, int depth) {
  std::vector<double> level(partial.end() - depth - 1, partial.end());
  for (int d = 0; d < depth; ++d) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  return level.front();
}

Accelerated euler_average(const std::vector<double>& partial, int depth) {
  const double value = averaged(partial, depth);
  return {value, std::abs(value - averaged(partial, depth - 1))};
}

// partial sums of sum_k w(k) t_k sign^k with t_k = (1/2)_k^3 / k!^3
template <class Weight>
std::vector<double> numeric_partials(long terms, int sign, Weight w) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(terms));
  double t = 1, acc = 0, s = 1;
  for (long k = 0; k < terms; ++k) {
    acc += s * w(k) * t;
    out.push_back(acc);
    const double r = (2.0 * k + 1) / (2.0 * k + 2);
    t *= r * r * r;
    s *= sign;
  }
  return out;
}

}  // namespace

PadicValue rational_mod(const BigRational& x, long p, int m) {
  const Int mod = prime_power(p, m);
  Int inv;
  if (mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p)) ||
      mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error(ErrorKind::NotPAdicallyIntegral,
                "denominator of " + x.get_str() + " is divisible by " + std::to_string(p));
  }
  Int r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return {p, m, r};
}

PadicValue integer_mod(const Int& x, long p, int m) { return rational_mod(BigRational(x), p, m); }

std::vector<BigRational> half_cubed_terms(long m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "term count must be >= 0");
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  BigRational t = 1;
  for (long k = 0; k <= m; ++k) {
    out.push_back(t);
    BigRational r(2 * k + 1, 2 * k + 2);
    r.canonicalize();
    t *= r * r * r;
  }
  return out;
}

BigRational bauer_partial(long m) {
  BigRational acc = 0;
  const auto t = half_cubed_terms(m);
  for (long k = 0; k <= m; ++k) {
    const BigRational term = (4 * k + 1) * t[static_cast<std::size_t>(k)];
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

BigRational half_cubed_partial(long m, int sign) {
  BigRational acc = 0;
  const auto t = half_cubed_terms(m);
  for (long k = 0; k <= m; ++k) {
    if (sign < 0 && k % 2 == 1) {
      acc -= t[static_cast<std::size_t>(k)];
    } else {
      acc += t[static_cast<std::size_t>(k)];
    }
  }
  return acc;
}

BigRational pochhammer_ratio_squared(const BigRational& a, long m) {
  BigRational r = 1;
  for (long j = 0; j < m; ++j) {
    const BigRational f = (a + j) / BigRational(j + 1);
    r *= f * f;
  }
  return r;
}

B2Result check_B2(long p) {
  require_odd_prime(p);
  const BigRational target = ((p - 1) / 2 % 2 == 0) ? BigRational(p) : BigRational(-p);
  return {congruent_mod(bauer_partial(p - 1), target, p, 3),
          congruent_mod(bauer_partial((p - 1) / 2), target, p, 3)};
}

BranchResult check_A2_style(long p, std::optional<long> coefficient) {
  require_odd_prime(p);
  const BigRational a1 = coefficient.value_or(closed_form_a(FormId::f1, p));
  BranchResult r;
  r.sum = congruent_mod(half_cubed_partial(p - 1, 1), a1, p, 2);
  if (p % 4 == 1) r.branch = congruent_mod(pochhammer_ratio_squared(BigRational(1, 2), (p - 1) / 4), a1, p, 2);
  return r;
}

BranchResult check_cong2(long p, std::optional<long> coefficient) {
  require_odd_prime(p);
  const BigRational a2 = coefficient.value_or(closed_form_a(FormId::f2, p));
  BigRational lhs = half_cubed_partial(p - 1, -1);
  if ((p - 1) / 2 % 2 == 1) lhs = -lhs;
  BranchResult r;
  r.sum = congruent_mod(lhs, a2, p, 2);
  if ((p - 1) % 8 == 0) {
    r.branch = congruent_mod(a2, pochhammer_ratio_squared(BigRational(1, 4), (p - 1) / 8), p, 2);
  } else if ((3 * p - 1) % 8 == 0) {
    r.branch = congruent_mod(a2, BigRational(-1, 2) * pochhammer_ratio_squared(BigRational(1, 4), (3 * p - 1) / 8), p, 2);
  }
  return r;
}

PadicValue padic_gamma(const BigRational& x, long p) {
  require_odd_prime(p);
  const long p2 = p * p;
  const long n = rational_mod(x, p, 2).residue.get_si();
  long prod = 1;
  for (long j = 1; j < n; ++j) {
    if (j % p != 0) prod = prod * j % p2;
  }
  if (n % 2 == 1) prod = (p2 - prod) % p2;
  return {p, 2, Int(prod)};
}

GammaResult check_gamma_congruences(long p) {
  require_odd_prime(p);
  auto g = [&](long num, long den) { return padic_gamma(BigRational(num, den), p).residue; };
  const Int g12 = g(1, 2), g34 = g(3, 4), g58 = g(5, 8), g78 = g(7, 8);
  const BigRational q1 = BigRational(g12 * g12) / BigRational(g34 * g34 * g34 * g34);
  const BigRational q2 = BigRational(g12 * g12) / BigRational(g58 * g58 * g78 * g78);
  const long a1 = closed_form_a(FormId::f1, p);
  const long a2 = closed_form_a(FormId::f2, p);
  BigRational lhs2 = half_cubed_partial(p - 1, -1);
  if ((p - 1) / 2 % 2 == 1) lhs2 = -lhs2;
  GammaResult r;
  r.g1 = congruent_mod(q1, BigRational(a1), p, 2);
  r.g2 = congruent_mod(lhs2, q2, p, 2);
  r.applicable1 = a1 != 0;
  r.applicable2 = a2 != 0;
  return r;
}

bool NumericCheck::pass() const { return std::abs(value - target) <= tolerance; }

NumericCheck numeric_check(const std::string& id) {
  constexpr double pi = std::numbers::pi;
  NumericCheck c;
  c.id = id;
  if (id == "bauer") {
    const auto partial = numeric_partials(10000, -1, [](long k) { return 4.0 * k + 1; });
    const Accelerated a = euler_average(partial, 3);
    c.value = a.value;
    c.error_estimate = a.error;
    c.target = 2 / pi;
    c.tolerance = 1e-6;
  } else if (id == "H2") {
    const auto partial = numeric_partials(10000, -1, [](long) { return 1.0; });
    const Accelerated a = euler_average(partial, 3);
    c.value = a.value;
    c.error_estimate = a.error;
    c.target = pi / (std::sqrt(2.0) * std::pow(std::tgamma(0.625) * std::tgamma(0.875), 2));
    c.tolerance = 1e-6;
  } else if (id == "H1") {
    // positive terms ~ (pi k)^(-3/2); the tail past K is about 2 / (pi^1.5 sqrt(K))
    const long K = 1000000;
    const auto partial = numeric_partials(K, 1, [](long) { return 1.0; });
    const double tail = 2.0 / (std::pow(pi, 1.5) * std::sqrt(static_cast<double>(K)));
    c.value = partial.back() + tail;
    c.error_estimate = tail;
    c.target = pi / std::pow(std::tgamma(0.75), 4);
    c.tolerance = 1e-2;
  } else if (id == "Lchi4") {
    const NumericValue v = dirichlet_L_chi4(2, 1000000);
    c.value = v.value;
    c.error_estimate = v.error;
    c.target = pi / 4;
    c.tolerance = 1e-6;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown numeric check '" + id + "' (bauer, H1, H2, Lchi4)");
  }
  return c;
}

std::vector<NumericCheck> numeric_checks() {
  std::vector<NumericCheck> out;
  for (const char* id : {"bauer", "H1", "H2", "Lchi4"}) out.push_back(numeric_check(id));
  return out;
}

}  // namespace qcong
