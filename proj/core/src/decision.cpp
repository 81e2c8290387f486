#include "tnngrass/decision.hpp"

#include <stdexcept>

#include "tnngrass/chevalley.hpp"

namespace tnn {

std::vector<int> filter_terms(const QuadExpression& e, const Matching& p) {
  if (p.ground() != e.symmetric_difference())
    throw std::invalid_argument("filter_terms: matching is not a partition of the symmetric difference");
  std::vector<int> kept;
  for (std::size_t a = 0; a < e.terms().size(); ++a) {
    const QuadTerm& t = e.terms()[a];
    bool all_split = true;
    for (const auto& [u, v] : p.pairs()) {
      const bool meets_i = t.I.contains(u) || t.I.contains(v);
      const bool meets_j = t.J.contains(u) || t.J.contains(v);
      if (!meets_i || !meets_j) {
        all_split = false;
        break;
      }
    }
    if (all_split) kept.push_back(static_cast<int>(a));
  }
  return kept;
}

namespace {

CertificateRow make_row(const QuadExpression& e, Matching m) {
  CertificateRow row;
  row.included_terms = filter_terms(e, m);
  row.matching = std::move(m);
  row.sum = 0;
  for (int a : row.included_terms) row.sum += e.terms()[a].coeff;
  return row;
}

std::optional<StarMap> star_for(const QuadExpression& e, MatchingMode mode) {
  if (mode != MatchingMode::symmetric) return std::nullopt;
  if (e.context().m != e.context().n || !is_principal(e))
    throw std::invalid_argument("certificate_sums: symmetric certificates require a principal expression");
  return StarMap(e.context().m);
}

}  // namespace

std::vector<CertificateRow> certificate_sums(const QuadExpression& e, MatchingMode mode) {
  const auto star = star_for(e, mode);
  std::vector<CertificateRow> rows;
  for (Matching& m : enumerate_matchings(e.symmetric_difference(), mode, star))
    rows.push_back(make_row(e, std::move(m)));
  return rows;
}

namespace {

Verdict decide_by_rows(const QuadExpression& e, MatchingMode mode, const DecideOptions& options) {
  const auto star = star_for(e, mode);
  Verdict verdict;
  for (Matching& m : enumerate_matchings(e.symmetric_difference(), mode, star)) {
    CertificateRow row = make_row(e, std::move(m));
    const bool negative = row.sum < 0;
    verdict.certificate.push_back(std::move(row));
    if (negative && !verdict.violating_row) {
      verdict.status = Status::invalid;
      verdict.violating_row = static_cast<int>(verdict.certificate.size()) - 1;
      if (!options.full_certificate) break;
    }
  }
  if (!verdict.valid() && options.falsify_samples > 0)
    verdict.counterexample =
        falsify(e, options.falsify_samples, options.seed, options.threads);
  return verdict;
}

}  // namespace

Verdict decide(const QuadExpression& e, const DecideOptions& options) {
  return decide_by_rows(e, MatchingMode::plain, options);
}

Verdict decide_principal(const QuadExpression& e, const DecideOptions& options) {
  if (e.context().m != e.context().n || !is_principal(e))
    throw std::invalid_argument("decide_principal: input is not principal; use decide");
  return decide_by_rows(e, MatchingMode::symmetric, options);
}

namespace {

// Recursion over simplified expressions. Every non-identity branch strictly
// reduces eta, so the search terminates; identity branches carry no
// information and are skipped.
bool recurse(const QuadExpression& simplified, RecursionStats& stats) {
  ++stats.nodes;
  const int eta = simplified.eta();
  if (eta == 0) {
    ++stats.leaves;
    Rational total(0);
    for (const QuadTerm& t : simplified.terms()) total += t.coeff;
    if (total < 0) stats.all_leaf_sums_nonnegative = false;
    return total >= 0;
  }

  const bool principal = is_principal(simplified);
  const int branch_limit = principal ? eta : 2 * eta - 1;
  for (int u = 1; u <= branch_limit; ++u) {
    QuadExpression moved = chevalley_apply(simplified, u, u + 1);
    bool changed = (moved != simplified);
    if (principal) {
      // star-paired second move (v*, u*) for (u, v) = (u, u+1)
      QuadExpression paired = chevalley_apply(moved, 2 * eta - u, 2 * eta + 1 - u);
      changed = changed || (paired != moved);
      moved = std::move(paired);
    }
    if (!changed) continue;
    if (!recurse(simplify(moved), stats)) return false;
  }
  return true;
}

}  // namespace

Verdict decide_recursive(const QuadExpression& e, RecursionStats* stats) {
  RecursionStats local;
  RecursionStats& s = stats ? *stats : local;
  s = RecursionStats{};
  Verdict verdict;
  verdict.status = recurse(simplify(e), s) ? Status::valid : Status::invalid;
  return verdict;
}

}  // namespace tnn
