#pragma once

#include <vector>

#include "tnngrass/index_set.hpp"

namespace tnn {

/// The initial seed of m-element coordinate sets for Gr(m, m+n): the base set
/// [m] together with the staircase sets ([1,m] \ [i-l, i]) u [j+m, j+m+l],
/// l = min(i-1, n-j), over (i,j) in [m] x [n]. Sorted and deduplicated;
/// mn+1 sets for every 1 <= m <= n. Throws when m < 1 or m > n.
std::vector<IndexSet> initial_cluster(int m, int n);

/// Keeps the sets containing exactly one of u, v, removes that element and
/// relabels through the order preserving map [ambient] \ {u,v} -> [ambient-2].
/// The result is deduplicated. Throws when u == v or either is outside
/// [ambient].
std::vector<IndexSet> r_reduce(const std::vector<IndexSet>& sets, int u, int v, int ambient);

}  // namespace tnn
