#include "qcong/identities.hpp"

#include <algorithm>
#include <array>

#include "qcong/error.hpp"

namespace qcong {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 13> kNames = {{
    {IdentityId::q_chu_vandermonde, "q_chu_vandermonde"},
    {IdentityId::q_kummer, "q_kummer"},
    {IdentityId::andrews_q_watson, "andrews_q_watson"},
    {IdentityId::jackson_q_dixon_even, "jackson_q_dixon_even"},
    {IdentityId::jackson_q_dixon_odd, "jackson_q_dixon_odd"},
    {IdentityId::q_clausen, "q_clausen"},
    {IdentityId::hqA, "hqA"},
    {IdentityId::hqB, "hqB"},
    {IdentityId::hqB2, "hqB2"},
    {IdentityId::spec_8k1, "spec_8k1"},
    {IdentityId::spec_8k3, "spec_8k3"},
    {IdentityId::spec_8k5, "spec_8k5"},
    {IdentityId::spec_8k7, "spec_8k7"},
}};

long get(const Params& p, const char* name, long fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

int get_sign(const Params& p, const char* name) {
  const long s = get(p, name, 1);
  if (s != 1 && s != -1) {
    throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " must be +-1");
  }
  return static_cast<int>(s);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::OutOfDomain, what);
}

// (x; q^base)_len for x = sign q^exp
void poch(QProduct& p, QPow x, long base, long len, int mult = 1) {
  p.pochhammer(x.sign, x.exp, base, len, mult);
}

TerminatingInstance chu(const Params& p) {
  const QPow a{get_sign(p, "sa"), get(p, "a", 2)};
  const QPow c{get_sign(p, "sc"), get(p, "c", 3)};
  const long n = get(p, "n", 1);
  const long B = get(p, "base", 1);
  require(n >= 0 && n <= 60, "q_chu_vandermonde needs 0 <= n <= 60");
  require(B >= 1, "base must be >= 1");
  TerminatingInstance t;
  t.lhs = {B, {a, {1, -n * B}}, {c}, {c.sign * a.sign, c.exp + n * B - a.exp}};
  t.upper = n;
  poch(t.rhs, {c.sign * a.sign, c.exp - a.exp}, B, n);
  poch(t.rhs, c, B, n, -1);
  return t;
}

TerminatingInstance andrews(const Params& p) {
  const QPow a{get_sign(p, "sa"), get(p, "a", 0)};
  const QPow b{get_sign(p, "sb"), get(p, "b", 1)};
  const long m = get(p, "m", 4);
  const long B = get(p, "base", 1);
  require(m >= 0 && m <= 60, "andrews_q_watson needs 0 <= m <= 60");
  require(B >= 1, "base must be >= 1");
  TerminatingInstance t;
  t.lhs.base = B;
  t.lhs.upper = {{1, -m * B}, {1, 2 * a.exp + B * (m + 1)}, b, {-b.sign, b.exp}};
  t.lhs.lower = {{a.sign, a.exp + B}, {-a.sign, a.exp + B}, {1, 2 * b.exp}};
  t.lhs.z = {1, B};
  t.upper = m;
  if (m % 2 == 1) {
    t.rhs.scalar = 0;
    return t;
  }
  const long h = m / 2;
  t.rhs.q_exp = b.exp * m;
  poch(t.rhs, {1, B}, 2 * B, h);
  poch(t.rhs, {1, 2 * a.exp + 2 * B - 2 * b.exp}, 2 * B, h);
  poch(t.rhs, {1, 2 * a.exp + 2 * B}, 2 * B, h, -1);
  poch(t.rhs, {1, 2 * b.exp + B}, 2 * B, h, -1);
  return t;
}

TerminatingInstance dixon(const Params& p, bool odd) {
  const long N = get(p, "N", 2);
  const long shape = get(p, "shape", 0);
  require(N >= 1 && N <= 30, "q-Dixon needs 1 <= N <= 30");
  require(shape == 0 || shape == 1, "q-Dixon shape must be 0 or 1");
  long B = get(p, "base", 1);
  QPow b{get_sign(p, "sb"), get(p, "b", 1)};
  QPow c{get_sign(p, "sc"), get(p, "c", 2)};
  if (shape == 1) {
    B = 4;
    b = {1, 1};
    c = {-1, 2 - 4 * N};
  }
  require(B >= 1, "base must be >= 1");
  const QPow bc{b.sign * c.sign, b.exp + c.exp};
  const QPow qb{1, B};
  TerminatingInstance t;
  t.lhs.base = B;
  const long top = odd ? B * (1 - 2 * N) : -2 * N * B;
  const long b_low = odd ? B * (2 - 2 * N) - b.exp : B * (1 - 2 * N) - b.exp;
  const QPow z{b.sign * c.sign, B * (2 - N) - b.exp - c.exp};
  if (shape == 1) {
    // The c parameter cancels against its lower partner: a 2phi1.
    t.lhs.upper = {{1, top}, b};
    t.lhs.lower = {{b.sign, b_low}};
  } else {
    t.lhs.upper = {{1, top}, b, c};
    t.lhs.lower = {{b.sign, b_low}, {c.sign, B * (1 - 2 * N) - c.exp}};
  }
  t.lhs.z = z;
  t.upper = odd ? 2 * N - 1 : 2 * N;
  if (!odd) {
    poch(t.rhs, b, B, N);
    poch(t.rhs, c, B, N);
    poch(t.rhs, qb, B, 2 * N);
    poch(t.rhs, bc, B, 2 * N);
    poch(t.rhs, qb, B, N, -1);
    poch(t.rhs, bc, B, N, -1);
    poch(t.rhs, b, B, 2 * N, -1);
    poch(t.rhs, c, B, 2 * N, -1);
  } else {
    poch(t.rhs, b, B, N);
    poch(t.rhs, c, B, N);
    poch(t.rhs, qb, B, 2 * N - 1);
    poch(t.rhs, bc, B, 2 * N - 1);
    poch(t.rhs, qb, B, N - 1, -1);
    poch(t.rhs, bc, B, N, -1);
    poch(t.rhs, b, B, 2 * N - 1, -1);
    poch(t.rhs, c, B, 2 * N, -1);
  }
  return t;
}

// 2phi1[q^{1-M}, q; q^{4-M}; q^4, -q^3] with M = n or 3n.
TerminatingInstance special_8k(const Params& p, long residue, long mult) {
  const long n = get(p, "n", residue);
  require(n >= 1 && n % 8 == residue, "n must be " + std::to_string(residue) + " mod 8");
  const long M = mult * n;
  TerminatingInstance t;
  t.lhs = {4, {{1, 1 - M}, {1, 1}}, {{1, 4 - M}}, {-1, 3}};
  if (residue == 1 || residue == 3) {
    const long e = (M - 1) / 8;
    t.upper = (M - 1) / 4;
    poch(t.rhs, {1, 5 - M}, 8, e);
    poch(t.rhs, {1, 7 - M}, 8, e);
    poch(t.rhs, {1, 4 - M}, 4, (M - 1) / 4, -1);
  } else {
    t.upper = n - 1;
    t.rhs.scalar = 0;
  }
  return t;
}

RatPoly inverted(const RatPoly& r) { return {r.num.inverted(), r.den.inverted()}; }

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "?";
}

IdentityId identity_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [k, n] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

bool is_terminating(IdentityId id) {
  switch (id) {
    case IdentityId::q_kummer:
    case IdentityId::q_clausen:
    case IdentityId::hqA:
    case IdentityId::hqB:
    case IdentityId::hqB2:
      return false;
    default:
      return true;
  }
}

TermSpec BasicHyper::term() const {
  TermSpec t;
  for (const auto& u : upper) t.factors.push_back({u.sign, u.exp, base, 1});
  for (const auto& l : lower) t.factors.push_back({l.sign, l.exp, base, -1});
  t.factors.push_back({1, base, base, -1});
  t.sign_k = z.sign;
  t.lin_coef = z.exp;
  return t;
}

BasicHyper BasicHyper::inverted() const {
  if (upper.size() != lower.size() + 1) {
    throw Error(ErrorKind::InvalidArgument, "q -> 1/q rewrite needs a balanced series");
  }
  // (s q^-a; q^-B)_k = (-s)^k q^{-a k - B k(k-1)/2} (s q^a; q^B)_k
  BasicHyper out = *this;
  int sign = z.sign;
  long exp = base - z.exp;
  for (const auto& u : upper) {
    sign *= u.sign;
    exp -= u.exp;
  }
  for (const auto& l : lower) {
    sign *= l.sign;
    exp += l.exp;
  }
  out.z = {sign, exp};
  return out;
}

TerminatingInstance terminating_instance(IdentityId id, const Params& params) {
  switch (id) {
    case IdentityId::q_chu_vandermonde:
      return chu(params);
    case IdentityId::andrews_q_watson:
      return andrews(params);
    case IdentityId::jackson_q_dixon_even:
      return dixon(params, false);
    case IdentityId::jackson_q_dixon_odd:
      return dixon(params, true);
    case IdentityId::spec_8k1:
      return special_8k(params, 1, 1);
    case IdentityId::spec_8k3:
      return special_8k(params, 3, 3);
    case IdentityId::spec_8k5:
      return special_8k(params, 5, 1);
    case IdentityId::spec_8k7:
      return special_8k(params, 7, 3);
    default:
      throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " is not terminating");
  }
}

bool verify_terminating(IdentityId id, const Params& params) {
  const TerminatingInstance t = terminating_instance(id, params);
  return hyper_sum_exact(t.lhs.term(), t.upper) == t.rhs.to_ratpoly();
}

bool verify_terminating_inverted(IdentityId id, const Params& params) {
  const TerminatingInstance t = terminating_instance(id, params);
  return hyper_sum_exact(t.lhs.inverted().term(), t.upper) == inverted(t.rhs.to_ratpoly());
}

long negative_reach(const TermSpec& t) {
  long horizon = 1;
  for (const auto& f : t.factors) {
    if (f.mult > 0 && f.a_exp < 0) horizon = std::max(horizon, -f.a_exp / f.step + 2);
  }
  long lowest = 0;
  for (long k = 0; k <= horizon; ++k) lowest = std::min(lowest, term_low_exponent(t, k));
  return -lowest;
}

namespace {

TermSpec clausen_factor(long alpha, QPow z) {
  BasicHyper h{4, {{1, 1 + alpha}, {1, 1 - alpha}}, {{1, 4}}, z};
  return h.term();
}

}  // namespace

bool verify_q_clausen(long alpha, QPow z, long N) {
  if (z.exp < 1) throw Error(ErrorKind::OutOfDomain, "q-Clausen needs z = +-q^beta with beta >= 1");
  if (N < 1 || N > 10'000) throw Error(ErrorKind::TooLarge, "series order must be in [1, 10^4]");
  const TermSpec f1 = clausen_factor(alpha, z);
  const TermSpec f2 = clausen_factor(alpha, {z.sign, z.exp + 2});
  TermSpec rhs;
  rhs.factors = {{1, 1 + alpha, 2, 1}, {1, 1 - alpha, 2, 1}, {1, 2, 4, 1}, {1, 2, 2, -2}, {1, 4, 4, -1}};
  rhs.sign_k = z.sign;
  rhs.lin_coef = z.exp;
  const long s1 = negative_reach(f1), s2 = negative_reach(f2);
  const PowerSeriesZ left = series_from_sum(f1, N, s1) * series_from_sum(f2, N, s2);
  return left == series_from_sum(rhs, N, s1 + s2);
}

namespace {

PowerSeriesZ kummer_rhs(int sa, long alpha, int sb, long beta, long N) {
  // (-q;q)(aq;q^2)(aq^2/b^2;q^2) / ((-q/b;q)(aq/b;q))
  return series_from_product({{-1, 1, 1, 1},
                              {sa, alpha + 1, 2, 1},
                              {sa, alpha + 2 - 2 * beta, 2, 1},
                              {-sb, 1 - beta, 1, -1},
                              {sa * sb, alpha + 1 - beta, 1, -1}},
                             N);
}

}  // namespace

bool verify_q_kummer(int sa, long alpha, int sb, long beta, long N) {
  if (alpha < 0 || beta > 0) {
    throw Error(ErrorKind::OutOfDomain, "q-Kummer series check needs alpha >= 0 and beta <= 0");
  }
  if (N < 1 || N > 10'000) throw Error(ErrorKind::TooLarge, "series order must be in [1, 10^4]");
  BasicHyper h{1, {{sa, alpha}, {sb, beta}}, {{sa * sb, alpha + 1 - beta}}, {-sb, 1 - beta}};
  return series_from_sum(h.term(), N) == kummer_rhs(sa, alpha, sb, beta, N);
}

PowerSeriesZ product_rhs(IdentityId id, long N, int form) {
  switch (id) {
    case IdentityId::hqA:
      return series_from_product({{1, 2, 4, 2}, {1, 3, 4, 2}, {1, 1, 4, -2}, {1, 4, 4, -2}}, N);
    case IdentityId::hqB:
      if (form == 0) {
        PowerSeriesZ s = series_from_product({{1, 2, 4, 2}, {-1, 3, 4, 2}, {-1, 1, 4, -2}, {1, 4, 4, -2}}, N);
        s.mul_binomial_power(1, 1, -1);
        return s;
      }
      if (form == 1) {
        // second product form exactly as printed
        return series_from_product({{1, 5, 4, 4}, {1, 6, 8, 4}, {1, 1, 2, -2}, {1, 4, 4, -2}}, N);
      }
      {
        // second product form with (q;q^4)^4 / (1 - q) in place of (q^5;q^4)^4
        PowerSeriesZ s = series_from_product({{1, 1, 4, 4}, {1, 6, 8, 4}, {1, 1, 2, -2}, {1, 4, 4, -2}}, N);
        s.mul_binomial_power(1, 1, -1);
        return s;
      }
    case IdentityId::hqB2:
      return series_from_product({{1, 1, 2, 1}, {1, 3, 2, 1}, {1, 2, 2, -2}}, N);
    case IdentityId::q_kummer:
      return kummer_rhs(1, 1, -1, 0, N);
    default:
      throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " has no product side");
  }
}

PowerSeriesZ hqB2_printed_rhs(long N) {
  return series_from_product({{1, 1, 2, 1}, {1, 3, 2, 1}, {1, 1, 2, -2}}, N);
}

bool verify_product_identity(IdentityId id, long N) {
  if (N < 1 || N > 10'000) throw Error(ErrorKind::TooLarge, "series order must be in [1, 10^4]");
  switch (id) {
    case IdentityId::hqA:
      return series_from_sum(preset("S8"), N) == product_rhs(id, N);
    case IdentityId::hqB: {
      const PowerSeriesZ lhs = series_from_sum(preset("S9"), N);
      return lhs == product_rhs(id, N, 0) && lhs == product_rhs(id, N, 2);
    }
    case IdentityId::hqB2:
      return series_from_sum(preset("S10"), N) == product_rhs(id, N);
    case IdentityId::q_kummer:
      return verify_q_kummer(1, 1, -1, 0, N);
    default:
      throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " is not a product identity");
  }
}

bool verify_q_gauss(long N) {
  return series_from_sum(preset("S1"), N) ==
         series_from_product({{1, 3, 4, 2}, {1, 2, 4, -1}, {1, 4, 4, -1}}, N);
}

}  // namespace qcong
