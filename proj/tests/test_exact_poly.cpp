#include <doctest.h>

#include <random>

#include "qcong/cyclotomic.hpp"
#include "qcong/error.hpp"
#include "qcong/quotient.hpp"

using namespace qcong;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

LaurentPoly random_poly(std::mt19937_64& rng, long max_deg, long min_exp = 0) {
  std::uniform_int_distribution<long> deg(0, max_deg), coef(-9, 9);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return LaurentPoly(min_exp, std::move(c));
}

}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(P("1 - q") * P("1 + q") == P("1 - q^2"));
  CHECK(P("q^-1 + 1") * P("q") == P("1 + q"));
  CHECK(P("1 - q") * P("1 - q^5") == P("1 - q - q^5 + q^6"));
  CHECK((P("1 + q") - P("1 + q")).is_zero());
  CHECK((P("1 + q") - P("1 + q")).min_exp() == 0);
}

TEST_CASE("text and json round trip") {
  LaurentPoly p = P("1 - q^3 + 2*q^5");
  CHECK(p.to_string() == "1 - q^3 + 2*q^5");
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(LaurentPoly::from_json(p.to_json()) == p);
  CHECK(P("-q^-2 + 3*q") == LaurentPoly(-2, {Int(-1), 0, 0, Int(3)}));
  CHECK(LaurentPoly().to_string() == "0");
  CHECK_THROWS_AS(P("1 + + q"), Error);
  CHECK_THROWS_AS(P("1 - q^"), Error);
  CHECK_THROWS_AS(P("3 q"), Error);
}

TEST_CASE("poly_divrem examples") {
  DivRem a = divrem(P("q^2 + q + 1"), P("q + 1"));
  CHECK(a.quot == P("q"));
  CHECK(a.rem == P("1"));
  DivRem b = divrem(P("q^3 - 1"), P("q^2 + q + 1"));
  CHECK(b.quot == P("q - 1"));
  CHECK(b.rem.is_zero());
  CHECK(divrem(P("q^6 - 1"), P("q^2 - q + 1")).rem.is_zero());
  CHECK_THROWS_AS(divrem(P("q^2"), P("2*q + 1")), Error);
  CHECK_THROWS_AS(divrem(P("q^2"), LaurentPoly()), Error);
}

TEST_CASE("poly_divrem reconstruction (randomized)") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly a = random_poly(rng, 40);
    LaurentPoly m = random_poly(rng, 12);
    std::vector<Int> c = m.coeffs();
    c.resize(c.size() + 1);
    c.back() = 1;
    m = LaurentPoly(0, c);
    DivRem d = divrem(a, m);
    CHECK(d.quot * m + d.rem == a);
    CHECK((d.rem.is_zero() || d.rem.max_exp() < m.max_exp()));
  }
}

TEST_CASE("karatsuba agrees with schoolbook") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    LaurentPoly a = random_poly(rng, 700), b = random_poly(rng, 500);
    CHECK(mul_coeffs(a.coeffs(), b.coeffs()) == mul_coeffs_schoolbook(a.coeffs(), b.coeffs()));
  }
}

TEST_CASE("cyclotomic examples and suite") {
  CHECK(cyclotomic(1) == P("q - 1"));
  CHECK(cyclotomic(2) == P("q + 1"));
  CHECK(cyclotomic(4) == P("q^2 + 1"));
  CHECK(cyclotomic(6) == P("q^2 - q + 1"));
  for (long n = 1; n <= 120; ++n) {
    LaurentPoly prod(1);
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    CHECK(prod == LaurentPoly::binomial(1, n) * LaurentPoly(-1));
    CHECK(cyclotomic(n).max_exp() == euler_phi(n));
  }
}

TEST_CASE("divides_power examples") {
  CHECK(divides_power(cyclotomic(7) * cyclotomic(7), 7, 2));
  CHECK(divides_power(P("q^3 - 1") * P("q^-1"), 3, 1));
  CHECK_FALSE(divides_power(P("1 - q^12"), 3, 2));
  CHECK(cyclotomic_valuation(cyclotomic_power(5, 3) * P("1 + q"), 5, 10) == 3);
}

TEST_CASE("valuation lemma: 1 - q^m has Phi_n-valuation [n | m]") {
  for (long n = 2; n <= 30; ++n) {
    for (long m = 1; m <= 90; ++m) {
      CHECK(cyclotomic_valuation(LaurentPoly::binomial(1, m), n, 3) == (m % n == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("quotient_embed examples") {
  QuotientElem a = quotient_embed(cyclotomic(5) * P("1 + q"), 5, 2);
  CHECK(a.valuation() == 1);
  CHECK(a.unit_part() == QPoly(P("1 + q")));

  RatPoly f(P("1 - q^3"), P("1 - q^4"));
  QuotientElem b = quotient_embed(f, 5, 1);
  CHECK(b.valuation() == 0);
  QPoly inv = inverse_mod(QPoly(P("1 - q^4")), QPoly(cyclotomic(5)));
  CHECK(b.unit_part() == mod(QPoly(P("1 - q^3")) * inv, QPoly(cyclotomic(5))));
  CHECK(b * quotient_embed(P("1 - q^4"), 5, 1) == quotient_embed(P("1 - q^3"), 5, 1));

  try {
    quotient_embed(RatPoly(LaurentPoly(1), P("1 - q^5")), 5, 1);
    FAIL("expected DenominatorNotCoprime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorNotCoprime);
  }
}

TEST_CASE("congruent examples") {
  CHECK(congruent(quotient_embed(P("q^5"), 5, 1), quotient_embed(P("1"), 5, 1)));
  CHECK_FALSE(congruent(quotient_embed(P("q^5"), 5, 2), quotient_embed(P("1"), 5, 2)));
  QuotientElem x = quotient_embed(P("3 + q^7 - q^-3"), 9, 2);
  CHECK(congruent(x, x));
  CHECK_THROWS_AS(congruent(quotient_embed(P("1"), 5, 1), quotient_embed(P("1"), 5, 2)), Error);
}

TEST_CASE("inverse of q uses Phi^k, not q^n") {
  for (long n : {3L, 5L, 12L}) {
    for (int k : {1, 2, 3}) {
      QuotientElem qi = QuotientElem::q_power(n, k, -1);
      CHECK(qi * QuotientElem::q_power(n, k, 1) == QuotientElem::one(n, k));
      CHECK(quotient_embed(P("q^-4"), n, k) * quotient_embed(P("q^4"), n, k) == QuotientElem::one(n, k));
    }
  }
}

TEST_CASE("quotient_embed is a ring homomorphism (randomized)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> nd(2, 30), kd(1, 2), shift(-4, 4);
  for (int it = 0; it < 120; ++it) {
    const long n = nd(rng);
    const int k = static_cast<int>(kd(rng));
    LaurentPoly fd = random_poly(rng, 6, shift(rng)), gd = random_poly(rng, 6, shift(rng));
    if (fd.is_zero() || gd.is_zero()) continue;
    RatPoly f(random_poly(rng, 10, shift(rng)), fd);
    RatPoly g(random_poly(rng, 10, shift(rng)), gd);
    if (cyclotomic_valuation(f.den, n, 1) > 0 || cyclotomic_valuation(g.den, n, 1) > 0) continue;
    QuotientElem ef = quotient_embed(f, n, k), eg = quotient_embed(g, n, k);
    CHECK(quotient_embed(f * g, n, k) == ef * eg);
    CHECK(quotient_embed(f + g, n, k) == ef + eg);
    const LaurentPoly cross = f.num * g.den - g.num * f.den;
    CHECK(congruent(ef, eg) == divides_power(cross, n, k));
  }
}

TEST_CASE("quotient inverse round trip") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    LaurentPoly f = random_poly(rng, 15);
    for (long n : {5L, 7L, 9L}) {
      for (int k : {1, 2, 3}) {
        QuotientElem e = quotient_embed(f, n, k);
        if (!e.is_unit()) continue;
        CHECK(e * e.inverse() == QuotientElem::one(n, k));
      }
    }
  }
}
