#include "qcong/congruences.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qcong/error.hpp"
#include "qcong/identities.hpp"

namespace qcong {

namespace {

constexpr std::array<std::pair<CheckStatus, std::string_view>, 4> kStatusNames{{
    {CheckStatus::pass, "pass"},
    {CheckStatus::fail, "fail"},
    {CheckStatus::undefined, "undefined"},
    {CheckStatus::skipped, "skipped"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::OutOfDomain, what);
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// (q;q^4)_k^2 / (q^4;q^4)_k^2 * sign^k q^(lin k), the S1-type summand with
// the two numerator Pochhammers starting at q^a1 and q^a2.
TermSpec s1_type(long a1, long a2, int sign, long lin) {
  TermSpec t;
  t.factors = {{1, a1, 4, 1}, {1, a2, 4, 1}, {1, 4, 4, -2}};
  t.sign_k = sign;
  t.lin_coef = lin;
  return t;
}

QProduct th31_rhs(long n) {
  const long m = (n - 1) / 4;
  QProduct p;
  p.pochhammer(1, 3, 4, m).pochhammer(1, 4, 4, m, -1);
  return p;
}

// q^((n-1)/2) (q^2;q^4)^2 / (q^4;q^4)^2 at index (n-1)/4
QProduct th32_rhs(long n) {
  const long m = (n - 1) / 4;
  QProduct p;
  p.q_exp = (n - 1) / 2;
  p.pochhammer(1, 2, 4, m, 2).pochhammer(1, 4, 4, m, -2);
  return p;
}

// the observation's form: q^((n-1)/2) (q^2;q^2)^2_{(n-1)/2} / (q^4;q^4)^4_{(n-1)/4}
QProduct observation_rhs(long n) {
  QProduct p;
  p.q_exp = (n - 1) / 2;
  p.pochhammer(1, 2, 2, (n - 1) / 2, 2).pochhammer(1, 4, 4, (n - 1) / 4, -4);
  return p;
}

std::vector<Instance> th31(long n) {
  require(n >= 1 && n % 2 == 1, "Theorem 3.1 needs odd n >= 1");
  const bool one = mod(n, 4) == 1;
  std::vector<Instance> out;
  Instance a{"sum q^2k", preset("S1"), n - 1, n, 1, std::nullopt};
  Instance b{"sum q^4k", preset("S1inv"), n - 1, n, 1, std::nullopt};
  if (one) {
    a.rhs = th31_rhs(n);
    b.rhs = th31_rhs(n);
    b.rhs->q_exp += (n * n - 1) / 4;
  }
  out.push_back(std::move(a));
  out.push_back(std::move(b));
  return out;
}

std::vector<Instance> th32(long n) {
  require(n >= 1 && n % 2 == 1, "Theorem 3.2 needs odd n >= 1");
  Instance a{"mod Phi_n^2", preset("S2"), n - 1, n, 2, std::nullopt};
  if (mod(n, 4) == 1) a.rhs = th32_rhs(n);
  return {a};
}

std::vector<Instance> observation(long n, ObservationReading reading) {
  require(n >= 3 && n % 2 == 1, "the observation needs odd n >= 3");
  const bool one = mod(n, 4) == 1;
  std::vector<long> moduli;
  for (long l = 3; l <= n; l += 4) {
    // the "all l < n" set is only displayed for n = 3 mod 4
    const bool below = reading == ObservationReading::all_below && !one;
    const bool in_set = below ? l < n : n % l == 0;
    if (in_set) moduli.push_back(l);
  }
  if (one) moduli.push_back(n);
  std::vector<Instance> out;
  for (long l : moduli) {
    Instance a{"mod Phi_" + std::to_string(l) + "^2", preset("S2"), n - 1, l, 2, std::nullopt};
    if (one) a.rhs = observation_rhs(n);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Instance> th33(long n) {
  require(n >= 1 && n % 2 == 1, "Theorem 3.3 needs odd n >= 1");
  Instance a{"mod Phi_n", preset("S3"), n - 1, n, 1, std::nullopt};
  const long c = mod(n, 8);
  if (c == 1 || c == 3) {
    const long m = c == 1 ? n : 3 * n;
    QProduct p;
    p.pochhammer(1, 5, 8, (m - 1) / 8).pochhammer(1, 7, 8, (m - 1) / 8);
    p.pochhammer(1, 4, 4, (m - 1) / 4, -1);
    a.rhs = p;
  }
  return {a};
}

std::vector<Instance> th34(long n) {
  require(n >= 1 && n % 2 == 1, "Theorem 3.4 needs odd n >= 1");
  Instance a{"mod Phi_n", preset("S4"), n - 1, n, 1, std::nullopt};
  const long c = mod(n, 8);
  const long m = (c == 1 || c == 5) ? n : 3 * n;
  QProduct p;
  if (c == 1 || c == 3) {
    const long len = (m - 1) / 8;
    p.pochhammer(1, 1, 4, len).pochhammer(1, 2, 4, len);
    p.pochhammer(-1, 3, 4, len).pochhammer(-1, 4, 4, len);
    p.pochhammer(1, 4, 4, (m - 1) / 4, -1);
    p.q_exp = (1 - n * n) / 8;
  } else {
    const long len = (m - 5) / 8;
    p.scalar = -1;
    p.factor(1, 2);
    p.pochhammer(-1, 3, 4, len).pochhammer(-1, 4, 4, len);
    p.pochhammer(1, 5, 4, len).pochhammer(1, 6, 4, len);
    p.pochhammer(1, 4, 4, (m - 5) / 4, -1);
    p.q_exp = (9 - n * n) / 8;
  }
  a.rhs = p;
  return {a};
}

std::vector<Instance> th35(long n) {
  require(n >= 1 && mod(n, 4) == 1, "Theorem 3.5 needs n = 1 mod 4");
  Instance a{"mod Phi_n", preset("S5"), (n - 1) / 2, n, 1, std::nullopt};
  if (mod(n, 8) == 1) {
    QProduct p;
    const long len = (n - 1) / 8;
    p.pochhammer(1, 1, 4, len, 2).pochhammer(1, 2, 4, len, 2);
    p.pochhammer(-1, 1, 1, (n - 1) / 2);
    p.pochhammer(1, 4, 4, (n - 1) / 4, -2);
    p.q_exp = -((1 - n) * (1 - n)) / 4;
    a.rhs = p;
  }
  return {a};
}

std::vector<Instance> problem36(long n) {
  require(n >= 1 && mod(n, 8) == 7, "Problem 3.6 needs n = 7 mod 8");
  return {{"mod Phi_n", preset("S5"), (n - 1) / 2, n, 1, std::nullopt}};
}

std::vector<Instance> conjecture(const char* series, long n, long r) {
  require(n >= 3 && mod(n, 4) == 3, "the conjectures need n = 3 mod 4");
  require(r >= 1, "r must be positive");
  return {{"upper rn-1", preset(series), r * n - 1, n, 2, std::nullopt},
          {"upper rn+(n-1)/2", preset(series), r * n + (n - 1) / 2, n, 2, std::nullopt}};
}

std::vector<Instance> th414(long n) {
  require(n >= 3 && mod(n, 4) == 3, "the (n-1)/2 truncation of S6 needs n = 3 mod 4");
  return {{"mod Phi_n^2", preset("S6"), (n - 1) / 2, n, 2, std::nullopt}};
}

std::complex<double> eval_product(const QProduct& p, std::complex<double> z, bool& pole) {
  std::complex<double> v = p.scalar.get_d() * std::pow(z, static_cast<double>(p.q_exp));
  for (const auto& f : p.factors) {
    const std::complex<double> x = 1.0 - static_cast<double>(f.sign) * std::pow(z, static_cast<double>(f.exp));
    if (f.mult < 0 && std::abs(x) < 1e-9) pole = true;
    v *= std::pow(x, static_cast<double>(f.mult));
  }
  return v;
}

template <class Body>
CongruenceReport run(std::string id, std::map<std::string, long> params, Body body) {
  CongruenceReport rep;
  rep.statement_id = std::move(id);
  rep.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutOfDomain || e.kind() == ErrorKind::InvalidArgument) throw;
    rep.status = CheckStatus::undefined;
    rep.error = std::string(to_string(e.kind()));
    rep.witness.reset();
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CongruenceReport check_instances(std::string id, std::map<std::string, long> params,
                                 const std::vector<Instance>& insts) {
  return run(std::move(id), std::move(params), [&](CongruenceReport& rep) {
    rep.status = CheckStatus::pass;
    for (const auto& inst : insts) {
      if (auto w = check_instance(inst)) {
        rep.status = CheckStatus::fail;
        rep.witness = inst.label + ": " + *w;
        return;
      }
    }
  });
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  for (const auto& [k, v] : kStatusNames) {
    if (k == s) return v;
  }
  return "?";
}

CheckStatus status_from_string(std::string_view s) {
  for (const auto& [k, v] : kStatusNames) {
    if (v == s) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown status '" + std::string(s) + "'");
}

nlohmann::json CongruenceReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["statement_id"] = statement_id;
  j["params"] = params;
  j["status"] = to_string(status);
  if (witness) j["witness"] = *witness;
  if (!error.empty()) j["error"] = error;
  if (!note.empty()) j["note"] = note;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

CongruenceReport CongruenceReport::from_json(const nlohmann::json& j) {
  CongruenceReport r;
  r.statement_id = j.at("statement_id").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, long>>();
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
  r.error = j.value("error", "");
  r.note = j.value("note", "");
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {"3.1", "3.2", "3.2a", "3.3", "3.4", "3.5",
                                               "3.6", "obs", "4.1", "4.2", "4.14"};
  return ids;
}

std::vector<Instance> statement_instances(const std::string& id, long n, long r,
                                          ObservationReading reading) {
  if (id == "3.1") return th31(n);
  if (id == "3.2") return th32(n);
  if (id == "3.3") return th33(n);
  if (id == "3.4") return th34(n);
  if (id == "3.5") return th35(n);
  if (id == "3.6") return problem36(n);
  if (id == "obs") return observation(n, reading);
  if (id == "4.1") return conjecture("S2", n, r);
  if (id == "4.2") return conjecture("S7", n, r);
  if (id == "4.14") return th414(n);
  throw Error(ErrorKind::InvalidArgument, "no instance list for statement '" + id + "'");
}

std::optional<std::string> check_instance(const Instance& inst) {
  LocalRing ring(inst.modulus, inst.k);
  LocalFraction lhs = hyper_sum_local(inst.term, inst.upper, ring);
  LocalFraction rhs = inst.rhs ? inst.rhs->to_local(ring) : LocalFraction{0, ring.zero(), ring.one()};
  if (local_equal(ring, lhs, rhs)) return std::nullopt;
  return to_quotient(ring, local_sub(ring, lhs, rhs)).canonical_residue().to_string();
}

std::optional<bool> numeric_instance(const Instance& inst, double tol) {
  const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(inst.modulus));
  bool pole = false;
  std::complex<double> lhs = 0;
  for (long k = 0; k <= inst.upper; ++k) lhs += eval_product(term_product(inst.term, k), z, pole);
  const std::complex<double> rhs = inst.rhs ? eval_product(*inst.rhs, z, pole) : 0.0;
  if (pole) return std::nullopt;
  return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
}

CongruenceReport check_th31(long n) { return check_instances("3.1", {{"n", n}}, th31(n)); }
CongruenceReport check_th32(long n) { return check_instances("3.2", {{"n", n}}, th32(n)); }
CongruenceReport check_th33(long n) { return check_instances("3.3", {{"n", n}}, th33(n)); }
CongruenceReport check_th34(long n) { return check_instances("3.4", {{"n", n}}, th34(n)); }
CongruenceReport check_th35(long n) { return check_instances("3.5", {{"n", n}}, th35(n)); }
CongruenceReport check_problem36(long n) { return check_instances("3.6", {{"n", n}}, problem36(n)); }
CongruenceReport check_th414(long n) { return check_instances("4.14", {{"n", n}}, th414(n)); }

CongruenceReport check_conj41(long n, long r) {
  return check_instances("4.1", {{"n", n}, {"r", r}}, conjecture("S2", n, r));
}

CongruenceReport check_conj42(long n, long r) {
  return check_instances("4.2", {{"n", n}, {"r", r}}, conjecture("S7", n, r));
}

CongruenceReport check_observation(long n, ObservationReading reading) {
  CongruenceReport rep = check_instances("obs", {{"n", n}}, observation(n, reading));
  rep.note = reading == ObservationReading::divisors ? "reading=divisors" : "reading=all_below";
  return rep;
}

CongruenceReport check_th32_parametric(long n) {
  require(n >= 1 && n % 2 == 1, "the parametric form needs odd n >= 1");
  return run("3.2a", {{"n", n}}, [&](CongruenceReport& rep) {
    const bool one = mod(n, 4) == 1;
    const RatPoly rhs = one ? th32_rhs(n).to_ratpoly() : RatPoly(LaurentPoly());
    // a = q^n and a = q^-n: (aq;q^2)_k (q/a;q^2)_k with the two roots in a
    for (long e : {n, -n}) {
      TermSpec t;
      t.factors = {{1, 1 + e, 2, 1}, {1, 1 - e, 2, 1}, {1, 2, 4, 1}, {1, 2, 2, -2}, {1, 4, 4, -1}};
      t.lin_coef = 2;
      const RatPoly lhs = hyper_sum_exact(t, n - 1);
      if (!(lhs == rhs)) {
        rep.status = CheckStatus::fail;
        const LaurentPoly diff = lhs.num * rhs.den - rhs.num * lhs.den;
        rep.witness = "a=q^" + std::to_string(e) + ": numerator of lhs - rhs = " + diff.to_string();
        return;
      }
    }
    // the same sum as Andrews' terminating 4phi3 in base q^2, with its
    // right side matching the displayed one
    const Params ap{{"a", 0}, {"b", 1}, {"m", (n - 1) / 2}, {"base", 2}};
    const TerminatingInstance inst = terminating_instance(IdentityId::andrews_q_watson, ap);
    const RatPoly andrews_rhs = inst.rhs.scalar == 0 ? RatPoly(LaurentPoly()) : inst.rhs.to_ratpoly();
    if (!verify_terminating(IdentityId::andrews_q_watson, ap) || !(andrews_rhs == rhs)) {
      rep.status = CheckStatus::fail;
      rep.witness = "Andrews evaluation differs from the displayed right side";
      return;
    }
    rep.status = CheckStatus::pass;
  });
}

CongruenceReport check_remark_chain(long n) {
  require(n >= 1 && mod(n, 4) == 1, "the remark chain needs n = 1 mod 4");
  return run("3.2r", {{"n", n}}, [&](CongruenceReport& rep) {
    LocalRing ring(n, 2);
    const LocalFraction s2 = hyper_sum_local(preset("S2"), n - 1, ring);
    const LocalFraction a = hyper_sum_local(s1_type(1 - n, 1 + n, 1, 2), n - 1, ring);
    const LocalFraction b = hyper_sum_local(s1_type(1 - n, 1 + n, 1, 4), n - 1, ring);
    const LocalFraction prod = local_mul(ring, a, b);
    QProduct closed;
    const long m = (n - 1) / 4;
    closed.q_exp = (n * n - 1) / 4;
    closed.pochhammer(1, 3 - n, 4, m, 2).pochhammer(1, 4, 4, m, -2);
    const LocalFraction c = closed.to_local(ring);
    rep.status = CheckStatus::pass;
    if (!local_equal(ring, s2, prod)) {
      rep.status = CheckStatus::fail;
      rep.witness = "S2 sum vs product: " + to_quotient(ring, local_sub(ring, s2, prod)).canonical_residue().to_string();
    } else if (!local_equal(ring, prod, c)) {
      rep.status = CheckStatus::fail;
      rep.witness = "product vs closed form: " + to_quotient(ring, local_sub(ring, prod, c)).canonical_residue().to_string();
    } else if (!local_equal(ring, c, th32_rhs(n).to_local(ring))) {
      rep.status = CheckStatus::fail;
      rep.witness = "closed form vs displayed right side";
    }
  });
}

bool applicable(const std::string& id, long n) {
  if (n < 1 || n % 2 == 0) return false;
  if (id == "3.5") return mod(n, 4) == 1;
  if (id == "3.6") return mod(n, 8) == 7;
  if (id == "4.1" || id == "4.2" || id == "4.14") return n >= 3 && mod(n, 4) == 3;
  if (id == "obs") return n >= 3;
  return true;
}

CongruenceReport check(const std::string& id, long n, long r, ObservationReading reading) {
  if (id == "3.2a") return check_th32_parametric(n);
  if (id == "obs") return check_observation(n, reading);
  if (id == "4.1") return check_conj41(n, r);
  if (id == "4.2") return check_conj42(n, r);
  std::map<std::string, long> params{{"n", n}};
  return check_instances(id, params, statement_instances(id, n, r, reading));
}

UpperRule upper_rule_from_string(std::string_view s) {
  if (s == "n-1") return UpperRule::n_minus_1;
  if (s == "(n-1)/2") return UpperRule::half;
  throw Error(ErrorKind::InvalidArgument, "upper rule must be 'n-1' or '(n-1)/2'");
}

long upper_from_rule(UpperRule rule, long n) { return rule == UpperRule::n_minus_1 ? n - 1 : (n - 1) / 2; }

LaurentPoly residue_report(const TermSpec& term, UpperRule rule, long n, int k) {
  require(n >= 1 && k >= 1, "residue_report needs n >= 1 and k >= 1");
  LocalRing ring(n, k);
  return to_quotient(ring, hyper_sum_local(term, upper_from_rule(rule, n), ring)).canonical_residue();
}

LaurentPoly residue_report(const std::string& preset_name, UpperRule rule, long n, int k) {
  return residue_report(preset(preset_name), rule, n, k);
}

}  // namespace qcong
