#include "tnngrass/chevalley.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tnn {

IndexSet shift_index_set(const IndexSet& s, int u, int v) {
  if (std::abs(u - v) != 1)
    throw std::invalid_argument("shift_index_set: u and v must be adjacent integers");
  if (s.contains(u) && !s.contains(v)) return s.without(u).with(v);
  return s;
}

QuadExpression chevalley_apply(const QuadExpression& e, int u, int v) {
  if (std::abs(u - v) != 1)
    throw std::invalid_argument("chevalley_apply: u and v must be adjacent integers");
  const int ambient = e.context().ambient();
  if (u < 1 || v < 1 || u > ambient || v > ambient)
    throw std::invalid_argument("chevalley_apply: u, v outside ambient range");

  auto movable = [&](const IndexSet& s) { return s.contains(u) && !s.contains(v); };
  int max_count = 0;
  for (const QuadTerm& t : e.terms())
    max_count = std::max(max_count, (movable(t.I) ? 1 : 0) + (movable(t.J) ? 1 : 0));
  if (max_count == 0) return e;

  std::vector<QuadTerm> kept;
  for (const QuadTerm& t : e.terms()) {
    const int count = (movable(t.I) ? 1 : 0) + (movable(t.J) ? 1 : 0);
    if (count != max_count) continue;
    kept.push_back({t.coeff, shift_index_set(t.I, u, v), shift_index_set(t.J, u, v)});
  }
  return QuadExpression(e.context(), std::move(kept));
}

QuadExpression simplify(const QuadExpression& e) {
  const IndexSet& common = e.common_intersection();
  const IndexSet& diff = e.symmetric_difference();
  const int eta = e.eta();
  OrderPreservingMap phi{diff};

  std::vector<QuadTerm> terms;
  terms.reserve(e.terms().size());
  for (const QuadTerm& t : e.terms())
    terms.push_back({t.coeff, phi.apply(set_difference(t.I, common)),
                     phi.apply(set_difference(t.J, common))});
  return QuadExpression(GrassmannContext(eta, eta), std::move(terms));
}

QuadExpression composite_chevalley(const QuadExpression& e, int u, int v) {
  const IndexSet& diff = e.symmetric_difference();
  if (u == v || !diff.contains(u) || !diff.contains(v))
    throw std::invalid_argument("composite_chevalley: u, v must be distinct members of the symmetric difference");
  const int lo = std::min(u, v), hi = std::max(u, v);
  for (int w = lo + 1; w < hi; ++w)
    if (diff.contains(w))
      throw std::invalid_argument("composite_chevalley: u, v not consecutive in the symmetric difference");

  // adjacent-step walk a -> b applied to an evolving expression
  auto walk = [](QuadExpression expr, int a, int b) {
    const int step = (a < b) ? 1 : -1;
    for (int x = a; x != b; x += step) expr = chevalley_apply(expr, x, x + step);
    return expr;
  };

  std::vector<int> blockers;  // common indices strictly between u and v
  for (int w : e.common_intersection().elements())
    if (lo < w && w < hi) blockers.push_back(w);

  QuadExpression out = e;
  for (std::size_t j = 0; j < blockers.size(); ++j)
    out = walk(std::move(out), blockers[j], lo + static_cast<int>(j));
  out = walk(std::move(out), lo + static_cast<int>(blockers.size()), hi);
  return out;
}

std::vector<IndexSet> principal_index_sets(int n) {
  std::vector<IndexSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> v;
    for (int k = 1; k <= n; ++k)
      v.push_back((mask >> (k - 1)) & 1 ? k : 2 * n + 1 - k);
    out.push_back(IndexSet(std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_principal_index_set(const IndexSet& s, int n) {
  if (s.size() != n) return false;
  for (int k = 1; k <= n; ++k)
    if (s.contains(k) == s.contains(2 * n + 1 - k)) return false;
  return true;
}

bool is_principal(const QuadExpression& e) {
  if (e.context().m != e.context().n)
    throw std::invalid_argument("is_principal: principal form requires Gr(n,2n)");
  const int n = e.context().m;
  for (const QuadTerm& t : e.terms())
    if (!is_principal_index_set(t.I, n) || !is_principal_index_set(t.J, n)) return false;
  return true;
}

}  // namespace tnn
