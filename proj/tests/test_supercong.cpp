#include <doctest.h>

#include "qcong/error.hpp"
#include "qcong/modforms.hpp"
#include "qcong/primes.hpp"
#include "qcong/supercong.hpp"

using namespace qcong;

namespace {

BigRational Q(long a, long b) {
  BigRational r(a, b);
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// (-1)^n prod_{0<j<n, p does not divide j} j mod p^2 for an explicit integer n
long gamma_by_product(long n, long p) {
  const long p2 = p * p;
  long prod = 1;
  for (long j = 1; j < n; ++j) {
    if (j % p) prod = prod * j % p2;
  }
  return n % 2 ? (p2 - prod) % p2 : prod;
}

}  // namespace

TEST_CASE("rational_mod examples") {
  CHECK(rational_mod(Q(435, 512), 3, 3).residue == 24);
  CHECK(rational_mod(Q(1, 2), 3, 2).residue == 5);
  CHECK(rational_mod(Q(-7, 1), 5, 2).residue == 18);
  try {
    rational_mod(Q(1, 3), 3, 2);
    FAIL("expected NotPAdicallyIntegral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPAdicallyIntegral);
  }
}

TEST_CASE("bauer_partial examples") {
  CHECK(bauer_partial(0) == 1);
  CHECK(bauer_partial(1) == Q(3, 8));
  CHECK(bauer_partial(2) == Q(435, 512));
  CHECK(half_cubed_partial(2, 1) == Q(603, 512));
  CHECK(half_cubed_partial(2, -1) == Q(475, 512));
}

TEST_CASE("term recurrence against factorials and central binomials") {
  const auto t = half_cubed_terms(100);
  Int fact = 1;
  for (long k = 0; k <= 100; ++k) {
    if (k > 0) fact *= k;
    // (1/2)_k = (2k)! / (4^k k!)
    Int two_k_fact = 1;
    for (long j = 2; j <= 2 * k; ++j) two_k_fact *= j;
    Int four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    BigRational half_k(two_k_fact, four_k * fact);
    half_k.canonicalize();
    const BigRational ratio = half_k / BigRational(fact);
    CHECK(t[static_cast<std::size_t>(k)] == ratio * ratio * ratio);
    BigRational central(binomial(2 * k, k), four_k);
    central.canonicalize();
    CHECK(ratio == central);
  }
}

TEST_CASE("Van Hamme B.2 examples") {
  for (long p : {3L, 5L, 7L}) {
    const B2Result r = check_B2(p);
    CHECK(r.full);
    CHECK(r.half);
  }
  CHECK_THROWS_AS(check_B2(9), Error);
}

TEST_CASE("A2-style and cong2 examples") {
  CHECK(check_A2_style(3).ok());
  CHECK_FALSE(check_A2_style(3).branch);
  CHECK(check_A2_style(5).ok());
  CHECK(check_A2_style(13).ok());
  CHECK(closed_form_a(FormId::f1, 13) == 10);
  CHECK(check_cong2(3).ok());
  CHECK(check_cong2(5).ok());
  CHECK(check_cong2(11).ok());
  CHECK(closed_form_a(FormId::f2, 11) == 14);
  CHECK(check_cong2(17).branch == std::optional<bool>(true));   // m = (p-1)/8
  CHECK(check_cong2(11).branch == std::optional<bool>(true));   // m = (3p-1)/8
}

TEST_CASE("denominators stay p-free up to 499") {
  for (long p : odd_primes_up_to(499)) {
    CHECK_NOTHROW(rational_mod(bauer_partial(p - 1), p, 3));
    CHECK_NOTHROW(rational_mod(half_cubed_partial(p - 1, 1), p, 2));
    CHECK_NOTHROW(rational_mod(half_cubed_partial(p - 1, -1), p, 2));
  }
}

TEST_CASE("padic_gamma examples") {
  CHECK(padic_gamma(0, 5).residue == 1);
  CHECK(padic_gamma(1, 5).residue == 24);  // -1 mod 25
  // 1/2 lifts to 5 mod 9: -(1*2*4) = 1 mod 9
  CHECK(padic_gamma(Q(1, 2), 3).residue == 1);
  CHECK(padic_gamma(Q(1, 2), 3).residue == gamma_by_product(5, 3));
  // 3/4 lifts to 7 mod 25
  CHECK(padic_gamma(Q(3, 4), 5).residue == gamma_by_product(7, 5));
  CHECK_THROWS_AS(padic_gamma(Q(1, 5), 5), Error);
}

TEST_CASE("Gamma_p reflection: Gamma_p(x) Gamma_p(1-x) = (-1)^x0 mod p^2") {
  for (long p : odd_primes_up_to(199)) {
    const long p2 = p * p;
    for (auto [a, b] : {std::pair{1L, 2L}, std::pair{1L, 4L}, std::pair{3L, 4L}}) {
      const BigRational x = Q(a, b);
      const Int prod = padic_gamma(x, p).residue * padic_gamma(1 - x, p).residue % p2;
      // x0 in [1, p] with x0 = x mod p
      long x0 = rational_mod(x, p, 1).residue.get_si();
      if (x0 == 0) x0 = p;
      CHECK(prod == (x0 % 2 ? p2 - 1 : 1));
    }
  }
}

TEST_CASE("Gamma_p congruences hold exactly where the coefficient is nonzero") {
  const GammaResult r3 = check_gamma_congruences(3);
  CHECK_FALSE(r3.g1);  // a1(3) = 0 while the Gamma quotient is a unit
  CHECK_FALSE(r3.applicable1);
  CHECK(r3.g2);
  const GammaResult r5 = check_gamma_congruences(5);
  CHECK(r5.g1);
  CHECK_FALSE(r5.g2);  // a2(5) = 0
  for (long p : odd_primes_up_to(199)) {
    const GammaResult r = check_gamma_congruences(p);
    CHECK(r.g1 == r.applicable1);
    CHECK(r.g2 == r.applicable2);
  }
}

TEST_CASE("numeric checks") {
  for (const NumericCheck& c : numeric_checks()) {
    INFO(c.id << " " << c.value << " vs " << c.target);
    CHECK(c.pass());
    CHECK(c.error_estimate <= c.tolerance);
  }
  CHECK_THROWS_AS(numeric_check("nope"), Error);
}
