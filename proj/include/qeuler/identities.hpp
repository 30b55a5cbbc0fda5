#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler::identities {

/// Parameters of one identity check.  Which fields apply depends on the
/// identity: m/h/k/l/i are integer indices (l the rebasing modulus, i the
/// inner truncation depth of the mixed recurrences), q the base, tau the
/// primary argument and tau2 the secondary argument of two-point
/// identities.  Unused fields stay disengaged and are omitted from
/// serialised reports.
struct IdentityParams {
  std::optional<long> m, h, k, l, i;
  std::optional<BigRational> q, tau, tau2;
};

struct IdentityReport {
  std::string id;
  IdentityParams params;
  BigRational lhs, rhs;
  bool pass = false;
  std::string erratum;  // catalog note carried by corrected/literal entries
};

/// Evaluation grid for registry runs.  tau values are specified as powers
/// of the running q (exponent list), which keeps every grid point exact;
/// upsilon_exps feeds the second argument of two-point identities.
struct GridSpec {
  long m_max = 6;
  long k_max = 3;
  long h_min = -1, h_max = 4;
  std::vector<long> l_values{1, 3, 5};
  std::vector<BigRational> q_values;
  std::vector<long> tau_exps{0, 1, 2, -1};
  std::vector<long> upsilon_exps{1, 2};

  /// m <= 6, k <= 3, h in [-1,4], l in {1,3,5}, q in {2, 1/2, 3/5, 4, 5/3},
  /// tau in {1, q, q^2, 1/q}.
  static GridSpec default_grid();
  /// Same shape with m <= 3, k <= 2, l in {1,3}: used where many repeated
  /// runs are compared (worker determinism) and in smoke tests.
  static GridSpec small_grid();
};

struct RunOptions {
  int workers = 1;
};

/// Ids of all registered identities, in catalog order.  Literal variants
/// (entries preserving an uncorrected form, expected to fail somewhere)
/// are excluded unless requested; default verification runs never include
/// them.
std::vector<std::string> registry_ids(bool include_literal = false);
bool is_literal_variant(const std::string& id);
const std::string& identity_summary(const std::string& id);

/// Runs the selected identities (all non-literal ones if filter is empty)
/// over the grid.  Hypothesis-violating or pole-hitting grid points are
/// skipped, never reported; if a selected identity ends up with no
/// applicable point at all, that is an error.  Reports come back sorted by
/// (id, m, h, k, l, i, q, tau, tau2) regardless of worker count.
std::vector<IdentityReport> run_registry(const GridSpec& grid,
                                         const std::vector<std::string>& filter = {},
                                         const RunOptions& opts = {});

/// Evaluates one identity at explicit parameters.  Violated hypotheses
/// (even l, i > m, missing tau, invalid q, ...) raise
/// InvalidParameterError rather than producing a report.
IdentityReport verify_one(const std::string& id, const IdentityParams& params);

bool all_pass(const std::vector<IdentityReport>& reports);

/// One JSON object per report, '\n'-separated:
/// {"id":..,"params":{..},"lhs":"num/den","rhs":"num/den","pass":..,"erratum":..}
std::string to_json_lines(const std::vector<IdentityReport>& reports);

/// Result of evaluating an identity instance over a grid that outsizes the
/// mechanically computed degree bounds of lhs - rhs: exact agreement on
/// such a grid certifies the instance as a rational-function identity, not
/// merely spot agreement.
struct DegreeCertificate {
  std::string id;
  IdentityParams inst;          // integer parameters of the instance
  long q_degree = 0;            // numerator degree bounds of lhs - rhs
  long tau_degree = 0;
  long upsilon_degree = 0;
  long points = 0;              // grid points evaluated
  bool certified = false;
};

/// Degree bounds alone (no evaluation) for an instance.
DegreeCertificate degree_bounds(const std::string& id, const IdentityParams& inst);

/// Full certification run for one instance: evaluates on a
/// (q_degree+1) x (tau_degree+1) x (upsilon_degree+1) grid of distinct
/// rational points.  Throws on the first disagreeing point.
DegreeCertificate certify_instance(const std::string& id, const IdentityParams& inst);

/// Certifies a fixed battery of representative instances of every
/// registered identity (the full default grid is still checked pointwise
/// by run_registry; this upgrades the listed instances to certified
/// identities).  Sized to stay inside a few seconds.
std::vector<DegreeCertificate> certify_battery();

}  // namespace qeuler::identities
