#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "qcong/error.hpp"
#include "qcong/qseries.hpp"

using namespace qcong;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

std::complex<double> root_of_unity(long n) {
  return std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n));
}

PowerSeriesZ euler_pentagonal(long N) {
  PowerSeriesZ s(N);
  for (long k = -100; k <= 100; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < N) s[e] += (k % 2 == 0) ? 1 : -1;
  }
  return s;
}

}  // namespace

TEST_CASE("pochhammer examples and recurrence") {
  CHECK(pochhammer({1, 1, 4, 1}, 2) == P("1 - q - q^5 + q^6"));
  CHECK(pochhammer({-1, 3, 4, 1}, 1) == P("1 + q^3"));
  CHECK(pochhammer({-1, 3, 4, 1}, 0) == LaurentPoly(1));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> a(-6, 6), step(1, 5), kk(0, 50);
  for (int it = 0; it < 50; ++it) {
    PochFactor p{it % 2 == 0 ? 1 : -1, a(rng), step(rng), 1};
    const long k = kk(rng);
    LaurentPoly next = pochhammer(p, k);
    next.mul_binomial(p.sign, p.a_exp + k * p.step);
    CHECK(pochhammer(p, k + 1) == next);
  }
}

TEST_CASE("presets transcribe the displayed summands") {
  TermSpec s1 = preset("S1");
  CHECK(s1.factors.size() == 2);
  CHECK(s1.lin_coef == 2);
  TermSpec s3 = preset("S3");
  CHECK(s3.sign_k == -1);
  CHECK(s3.lin_coef == 3);
  TermSpec s10 = preset("S10");
  CHECK(s10.quad_coef == 1);
  CHECK(s10.sign_k == -1);
  CHECK(s10.affine.size() == 2);
  CHECK(preset_names().size() == 11);
  try {
    preset("S11");
    FAIL("expected UnknownPreset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPreset);
  }
  for (const auto& name : preset_names()) {
    TermSpec t = preset(name);
    CHECK(TermSpec::from_json(t.to_json()).to_json() == t.to_json());
  }
}

TEST_CASE("term ratios agree with direct term products") {
  for (const auto& name : preset_names()) {
    TermSpec t = preset(name);
    for (long j = 0; j < 6; ++j) {
      RatPoly lhs = term_product(t, j).to_ratpoly() * term_ratio(t, j).to_ratpoly();
      CHECK(lhs == term_product(t, j + 1).to_ratpoly());
    }
  }
}

TEST_CASE("hyper_sum_exact examples") {
  TermSpec s1 = preset("S1");
  CHECK(hyper_sum_exact(s1, 0) == RatPoly(LaurentPoly(1)));
  RatPoly two = hyper_sum_exact(s1, 2);
  const auto w = root_of_unity(3);
  CHECK(std::abs(two.num.eval(w) / two.den.eval(w)) < 1e-9);

  // S9 to k = 1: 1 + (1 - q^5)(1 - q^2)^3 (-q) / ((1 - q)(1 - q^4)^3)
  RatPoly s9 = hyper_sum_exact(preset("S9"), 1);
  LaurentPoly num = P("1 - q^5") * P("1 - q^2") * P("1 - q^2") * P("1 - q^2") * P("-q");
  LaurentPoly den = P("1 - q") * P("1 - q^4") * P("1 - q^4") * P("1 - q^4");
  CHECK(s9 == RatPoly(den + num, den));
}

TEST_CASE("degree guard") {
  TermSpec t = preset("S10");
  try {
    hyper_sum_exact(t, 2000);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("hyper_sum_mod examples") {
  CHECK(hyper_sum_mod(preset("S1"), 2, 3, 1).is_zero());
  CHECK(hyper_sum_mod(preset("S1"), 4, 5, 1) == quotient_embed(RatPoly(P("1 - q^3"), P("1 - q^4")), 5, 1));
  CHECK(hyper_sum_mod(preset("S2"), 6, 7, 2).is_zero());
  CHECK_FALSE(hyper_sum_mod(preset("S2"), 6, 7, 3).is_zero());
}

TEST_CASE("hyper_sum_mod agrees with the exact path") {
  for (const auto& name : preset_names()) {
    TermSpec t = preset(name);
    for (long n = 2; n <= 25; ++n) {
      for (int k = 1; k <= 2; ++k) {
        for (long upper : {n / 2, n - 1}) {
          RatPoly exact = hyper_sum_exact(t, upper);
          if (cyclotomic_valuation(exact.den, n, 1) > 0) continue;
          INFO(name << " n=" << n << " k=" << k << " upper=" << upper);
          CHECK(hyper_sum_mod(t, upper, n, k) == quotient_embed(exact, n, k));
        }
      }
    }
  }
}

TEST_CASE("hyper_sum_mod reports poles") {
  // Upper past n - 1 with a lone denominator factor vanishing at the root.
  TermSpec t;
  t.factors = {{1, 1, 1, -1}};
  try {
    hyper_sum_mod(t, 6, 5, 1);
    FAIL("expected PoleAtCyclotomic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtCyclotomic);
  }
}

TEST_CASE("local ring round trip") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (long n : {3L, 7L, 12L}) {
    for (int k : {1, 2, 3}) {
      LocalRing ring(n, k);
      for (int it = 0; it < 5; ++it) {
        std::vector<Int> c(20);
        for (auto& x : c) x = coef(rng);
        LaurentPoly f(-3, c);
        QuotientElem direct = quotient_embed(f, n, k);
        QuotientElem via = QuotientElem(n, k, ring.reconstruct(ring.expand(f)));
        CHECK(direct == via);
      }
    }
  }
}

TEST_CASE("series_from_product examples") {
  PowerSeriesZ euler = series_from_product({{1, 1, 1, 1}}, 60);
  CHECK(euler == euler_pentagonal(60));
  PowerSeriesZ both = series_from_product({{1, 1, 2, 1}, {1, 1, 2, -1}}, 40);
  CHECK(both == PowerSeriesZ::one(40));
  PowerSeriesZ q4 = series_from_product({{1, 4, 4, 6}}, 9);
  CHECK(q4[0] == 1);
  CHECK(q4[4] == -6);
  CHECK(q4[8] == 9);
  CHECK(euler.inverse() == series_from_product({{1, 1, 1, -1}}, 60));
  try {
    series_from_product({{1, 0, 1, 1}}, 10);
    FAIL("expected DivergentProduct");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentProduct);
  }
}

TEST_CASE("series_from_sum examples") {
  // (1 + q) from k = 0 plus q from k = 1: the q-coefficient is 2, as on the
  // product side, whose leading factor is (1 - q)^-2.
  PowerSeriesZ s8 = series_from_sum(preset("S8"), 2);
  CHECK(s8[0] == 1);
  CHECK(s8[1] == 2);
  PowerSeriesZ s10 = series_from_sum(preset("S10"), 1);
  CHECK(s10[0] == 1);
  // Left side of the (-q)^{k^2} Bauer-type series: 1 - q + 2q^2 - 4q^3 + 7q^4 - ...
  PowerSeriesZ b2 = series_from_sum(preset("S10"), 5);
  CHECK(b2.coeffs() == std::vector<Int>{1, -1, 2, -4, 7});
}

TEST_CASE("series_from_sum rejects non-growing valuations") {
  TermSpec t;
  t.factors = {{1, 1, 1, 1}, {1, 1, 1, -1}};
  try {
    series_from_sum(t, 10);
    FAIL("expected NotSummableAsSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSummableAsSeries);
  }
}

TEST_CASE("pentagonal fast path agrees with the factor-by-factor product") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> step(1, 6), start(1, 6), mult(-3, 3);
  for (int it = 0; it < 40; ++it) {
    std::vector<InfiniteFactor> fs;
    for (int j = 0; j < 3; ++j) {
      const long t = step(rng);
      const bool euler = (rng() % 2) == 0;
      fs.push_back({euler ? 1 : (rng() % 2 ? 1 : -1), euler ? t : start(rng), t, static_cast<int>(mult(rng))});
    }
    CHECK(series_from_product(fs, 150) == series_from_product_reference(fs, 150));
  }
}
