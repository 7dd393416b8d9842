#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/qseries.hpp"

namespace qcong {

enum class CheckStatus { pass, fail, undefined, skipped };

std::string_view to_string(CheckStatus s);
CheckStatus status_from_string(std::string_view s);

/// Outcome of one (statement, parameters) check.
///   fail carries a witness (canonical residue of lhs - rhs, text form);
///   undefined carries the triggering error name in `error`.
struct CongruenceReport {
  std::string statement_id;
  std::map<std::string, long> params;
  CheckStatus status = CheckStatus::skipped;
  std::optional<std::string> witness;
  std::string error;
  std::string note;
  double elapsed_ms = 0;

  nlohmann::json to_json(bool with_timing = true) const;
  static CongruenceReport from_json(const nlohmann::json& j);
};

/// One displayed congruence at a concrete n: the truncated sum of `term` up
/// to `upper` against `rhs` (nullopt means zero) modulo Phi_modulus^k.
struct Instance {
  std::string label;
  TermSpec term;
  long upper = 0;
  long modulus = 0;
  int k = 1;
  std::optional<QProduct> rhs;
};

enum class ObservationReading { divisors, all_below };

/// Statement ids accepted by check(): 3.1, 3.2, 3.2a, 3.3, 3.4, 3.5, 3.6,
/// obs, 4.1, 4.2, 4.14.
const std::vector<std::string>& statement_ids();

/// The instances behind a statement (every id except the exact 3.2a).
/// Throws OutOfDomain when n (or r) is outside the statement's range.
std::vector<Instance> statement_instances(const std::string& id, long n, long r = 1,
                                          ObservationReading reading = ObservationReading::divisors);

/// Exact verdict of one instance in the local ring; the witness is returned
/// on mismatch. Throws PoleAtCyclotomic / SingularSpecialization.
std::optional<std::string> check_instance(const Instance& inst);

/// Floating-point evaluation of both sides at exp(2 pi i / modulus); nullopt
/// when a denominator vanishes there. A tripwire for k = 1 verdicts only.
std::optional<bool> numeric_instance(const Instance& inst, double tol = 1e-6);

CongruenceReport check_th31(long n);
CongruenceReport check_th32(long n);
CongruenceReport check_th32_parametric(long n);
CongruenceReport check_observation(long n, ObservationReading reading);
CongruenceReport check_th33(long n);
CongruenceReport check_th34(long n);
CongruenceReport check_th35(long n);
CongruenceReport check_problem36(long n);
CongruenceReport check_conj41(long n, long r);
CongruenceReport check_conj42(long n, long r);
CongruenceReport check_th414(long n);

/// Dispatch by statement id; r is used by the conjectures only.
CongruenceReport check(const std::string& id, long n, long r = 1,
                       ObservationReading reading = ObservationReading::divisors);
/// Whether (id, n) lies in the statement's residue class.
bool applicable(const std::string& id, long n);

/// The alternative route for n = 1 mod 4 modulo Phi_n^2: the S2 sum equals
/// the product of the two shifted S1-type sums, and that product equals
/// q^((n^2-1)/4) (q^(3-n); q^4)^2 / (q^4; q^4)^2 at index (n-1)/4.
CongruenceReport check_remark_chain(long n);

enum class UpperRule { n_minus_1, half };
UpperRule upper_rule_from_string(std::string_view s);
long upper_from_rule(UpperRule rule, long n);

/// Canonical residue of the truncated sum modulo Phi_n^k.
LaurentPoly residue_report(const std::string& preset_name, UpperRule rule, long n, int k);
LaurentPoly residue_report(const TermSpec& term, UpperRule rule, long n, int k);

}  // namespace qcong
