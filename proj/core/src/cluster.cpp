#include "tnngrass/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnn {

std::vector<IndexSet> initial_cluster(int m, int n) {
  if (m < 1 || m > n)
    throw std::invalid_argument("initial_cluster: need 1 <= m <= n");
  std::vector<IndexSet> sets;
  sets.push_back(IndexSet::range(1, m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int ell = std::min(i - 1, n - j);
      IndexSet s = set_difference(IndexSet::range(1, m), IndexSet::range(i - ell, i));
      s = set_union(s, IndexSet::range(j + m, j + m + ell));
      sets.push_back(std::move(s));
    }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<IndexSet> r_reduce(const std::vector<IndexSet>& sets, int u, int v, int ambient) {
  if (u == v || u < 1 || v < 1 || u > ambient || v > ambient)
    throw std::invalid_argument("r_reduce: need distinct u, v in [ambient]");
  OrderPreservingMap phi{IndexSet::range(1, ambient).without(u).without(v)};
  std::vector<IndexSet> out;
  for (const IndexSet& s : sets) {
    const bool has_u = s.contains(u), has_v = s.contains(v);
    if (has_u == has_v) continue;
    out.push_back(phi.apply(s.without(has_u ? u : v)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tnn
