#pragma once

#include <optional>
#include <vector>

#include "tnngrass/matching.hpp"
#include "tnngrass/quad_expression.hpp"
#include "tnngrass/test_point.hpp"

namespace tnn {

/// One certificate line: a noncrossing matching of the common symmetric
/// difference (in the expression's original labels), the terms it keeps and
/// their coefficient sum.
struct CertificateRow {
  Matching matching;
  std::vector<int> included_terms;
  Rational sum;
};

enum class Status { valid, invalid };

struct Verdict {
  Status status = Status::valid;
  /// All rows when valid or when a full certificate was requested; otherwise
  /// the rows up to and including the first violating one.
  std::vector<CertificateRow> certificate;
  /// Index into `certificate` of the first row with a negative sum.
  std::optional<int> violating_row;
  /// Best-effort numeric witness, attached when falsification is enabled.
  std::optional<FalsifyResult> counterexample;

  bool valid() const { return status == Status::valid; }
};

/// Term indices kept by a matching of the symmetric difference: a term
/// survives when every pair of the matching meets both of its index sets.
/// Throws when the matching is not a partition of the symmetric difference.
std::vector<int> filter_terms(const QuadExpression& e, const Matching& p);

/// One row per matching of the symmetric difference, in canonical
/// (lexicographic) order. Symmetric mode restricts to the star-invariant
/// matchings and requires a principal expression.
std::vector<CertificateRow> certificate_sums(const QuadExpression& e,
                                             MatchingMode mode = MatchingMode::plain);

struct DecideOptions {
  bool full_certificate = false;
  /// When positive, an invalid verdict is augmented with a sampled
  /// counterexample (best effort within the budget).
  long falsify_samples = 0;
  unsigned long seed = 0;
  int threads = 1;
};

/// The inequality holds over the nonnegative Grassmannian iff every
/// certificate row sum is >= 0. Production decision path.
Verdict decide(const QuadExpression& e, const DecideOptions& options = {});

/// Same verdict through the star-symmetric certificate, applicable exactly to
/// principal expressions over Gr(n,2n). Throws on non-principal input.
Verdict decide_principal(const QuadExpression& e, const DecideOptions& options = {});

struct RecursionStats {
  long nodes = 0;
  long leaves = 0;
  bool all_leaf_sums_nonnegative = true;
};

/// Independent decision path: simplify, then branch over the elementary index
/// moves (over the star-paired composite moves when the expression is
/// principal) and recurse; a scalar leaf is valid iff its coefficient sum is
/// >= 0. Moves acting as the identity are skipped.
Verdict decide_recursive(const QuadExpression& e, RecursionStats* stats = nullptr);

}  // namespace tnn
