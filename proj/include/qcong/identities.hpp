#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

enum class IdentityId {
  q_chu_vandermonde,
  q_kummer,
  andrews_q_watson,
  jackson_q_dixon_even,
  jackson_q_dixon_odd,
  q_clausen,
  hqA,
  hqB,
  hqB2,
  spec_8k1,
  spec_8k3,
  spec_8k5,
  spec_8k7,
};

std::string_view to_string(IdentityId id);
/// Throws InvalidArgument for unknown names.
IdentityId identity_from_string(std::string_view name);
const std::vector<IdentityId>& all_identities();
bool is_terminating(IdentityId id);

using Params = std::map<std::string, long>;

/// sign * q^exp
struct QPow {
  int sign = 1;
  long exp = 0;
};

/// r+1 phi r [upper; lower; q^base, z]; the (q^base; q^base)_k denominator is
/// implicit.
struct BasicHyper {
  long base = 1;
  std::vector<QPow> upper;
  std::vector<QPow> lower;
  QPow z;

  TermSpec term() const;
  /// The same series with q replaced by 1/q, rewritten as a series in q.
  /// Requires a balanced series (#upper = #lower + 1): the quadratic
  /// q-powers of the Pochhammer inversions then cancel and only the argument
  /// changes.
  BasicHyper inverted() const;
};

/// A terminating summation formula instantiated at concrete parameters.
struct TerminatingInstance {
  BasicHyper lhs;
  long upper = 0;
  QProduct rhs;
};

/// Instantiates a terminating identity. Parameter names per id:
///   q_chu_vandermonde: sa, a, sc, c, n, base          (a = sa q^a, c = sc q^c)
///   andrews_q_watson:  sa, a, sb, b, m, base
///   jackson_q_dixon_even/odd: sb, b, sc, c, N, base, shape
///       shape = 1 selects the specialization q -> q^4, b = q, c = -q^(2-4N)
///   spec_8k1 / spec_8k3 / spec_8k5 / spec_8k7: n (in the matching class mod 8)
/// Missing names take documented defaults. Throws OutOfDomain for
/// parameters outside an identity's range.
TerminatingInstance terminating_instance(IdentityId id, const Params& params);

/// Exact check of a terminating identity. Throws SingularSpecialization when
/// a denominator vanishes identically.
bool verify_terminating(IdentityId id, const Params& params);
/// The same identity after q -> 1/q on both sides, with the left side
/// re-expanded from the inverted parameters.
bool verify_terminating_inverted(IdentityId id, const Params& params);

/// Jackson's q-Clausen product at a = q^alpha and argument z, to order N.
bool verify_q_clausen(long alpha, QPow z, long N);

/// q-Kummer at a = sa q^alpha, b = sb q^beta (beta <= 0 and alpha >= 0 so
/// every infinite factor is a unit series).
bool verify_q_kummer(int sa, long alpha, int sb, long beta, long N);

/// Series-versus-product identities: hqA, hqB (first product form and the
/// corrected second form), hqB2 (corrected denominator), and q_kummer at its
/// default specialization a = q, b = -1.
bool verify_product_identity(IdentityId id, long N);

/// The q-Gauss evaluation of 2phi1[q, q; q^4; q^4, q^2].
bool verify_q_gauss(long N);

/// Right sides as series, exposed for reports and tests. For hqB, form 0 is
/// the first product, form 1 the second product as printed and form 2 the
/// second product corrected by the factor (1 - q)^3 it is missing.
PowerSeriesZ product_rhs(IdentityId id, long N, int form = 0);
/// hqB2 with the denominator exactly as printed, (q;q^2)_inf^2.
PowerSeriesZ hqB2_printed_rhs(long N);

/// Least shift s >= 0 making q^s * sum_k term_k free of negative exponents.
long negative_reach(const TermSpec& t);

}  // namespace qcong
