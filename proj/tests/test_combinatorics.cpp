#include <doctest.h>

#include "testutil.hpp"
#include "tnngrass/cluster.hpp"
#include "tnngrass/index_set.hpp"

using namespace tnn;
using namespace tnn::testutil;

TEST_CASE("IndexSet construction and basics") {
  IndexSet s({7, 2, 5});
  CHECK(s.elements() == std::vector<int>{2, 5, 7});
  CHECK(s.contains(5));
  CHECK(!s.contains(3));
  CHECK_THROWS_AS(IndexSet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({0}), std::invalid_argument);
  CHECK(IndexSet::range(3, 2).empty());
  CHECK(ix({1, 2, 3}).complement_in(5) == ix({4, 5}));
  CHECK(set_union(ix({1, 3}), ix({2, 3})) == ix({1, 2, 3}));
  CHECK(set_intersection(ix({1, 3}), ix({2, 3})) == ix({3}));
  CHECK(set_difference(ix({1, 3}), ix({2, 3})) == ix({1}));
}

TEST_CASE("order preserving map") {
  OrderPreservingMap phi{ix({2, 5, 7})};
  CHECK(phi.apply(2) == 1);
  CHECK(phi.apply(5) == 2);
  CHECK(phi.apply(7) == 3);
  CHECK(phi.invert(3) == 7);
  CHECK(phi.apply(ix({5, 7})) == ix({2, 3}));
  CHECK(phi.invert(ix({1, 2})) == ix({2, 5}));
  CHECK_THROWS_AS(phi.apply(3), std::invalid_argument);
  CHECK_THROWS_AS(phi.invert(4), std::invalid_argument);

  OrderPreservingMap identity{ix({1, 2})};
  CHECK(identity.apply(1) == 1);
  CHECK(identity.apply(2) == 2);

  OrderPreservingMap empty{IndexSet{}};
  CHECK(empty.size() == 0);
}

TEST_CASE("consecutive pairs") {
  CHECK(consecutive_pairs(ix({1, 2, 3, 4})) ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(consecutive_pairs(ix({1, 4, 9})) == std::vector<std::pair<int, int>>{{1, 4}, {4, 9}});
  CHECK(consecutive_pairs(ix({5})).empty());
  CHECK(consecutive_pairs(IndexSet{}).empty());
}

TEST_CASE("lattice min/max") {
  auto [lo, hi] = lattice_min_max(ix({1, 4}), ix({2, 3}));
  CHECK(lo == ix({1, 3}));
  CHECK(hi == ix({2, 4}));

  auto [lo2, hi2] = lattice_min_max(ix({1, 2}), ix({1, 2}));
  CHECK(lo2 == ix({1, 2}));
  CHECK(hi2 == ix({1, 2}));

  auto [lo3, hi3] = lattice_min_max(ix({1, 2}), ix({3, 4}));
  CHECK(lo3 == ix({1, 2}));
  CHECK(hi3 == ix({3, 4}));

  CHECK_THROWS_AS(lattice_min_max(ix({1}), ix({1, 2})), std::invalid_argument);
}

TEST_CASE("lattice min/max invariants on random subsets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(draw_below(rng, 6));
    const int m = 1 + static_cast<int>(draw_below(rng, n));
    auto subs = subsets_of_size(n, m);
    const IndexSet& a = subs[draw_below(rng, subs.size())];
    const IndexSet& b = subs[draw_below(rng, subs.size())];
    auto [lo, hi] = lattice_min_max(a, b);
    CHECK(lo.size() == m);
    CHECK(hi.size() == m);
    for (int k = 0; k < m; ++k) CHECK(lo.elements()[k] <= hi.elements()[k]);
    // applying the operation twice is stable
    auto [lo2, hi2] = lattice_min_max(lo, hi);
    CHECK(lo2 == lo);
    CHECK(hi2 == hi);
  }
}

TEST_CASE("subsets_of_size") {
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(4, 0) == std::vector<IndexSet>{IndexSet{}});
  CHECK(subsets_of_size(8, 4).size() == 70);
  CHECK(subsets_of_size(3, 2) ==
        std::vector<IndexSet>{ix({1, 2}), ix({1, 3}), ix({2, 3})});
}

TEST_CASE("initial cluster examples") {
  CHECK(initial_cluster(2, 2) == std::vector<IndexSet>{ix({1, 2}), ix({1, 4}), ix({2, 3}),
                                                       ix({2, 4}), ix({3, 4})});
  CHECK(initial_cluster(1, 1) == std::vector<IndexSet>{ix({1}), ix({2})});
  CHECK(initial_cluster(1, 2) == std::vector<IndexSet>{ix({1}), ix({2}), ix({3})});
  CHECK_THROWS_AS(initial_cluster(3, 2), std::invalid_argument);
}

TEST_CASE("initial cluster cardinality is mn+1") {
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 5; ++n)
      CHECK(initial_cluster(m, n).size() == static_cast<std::size_t>(m * n + 1));
}

TEST_CASE("r_reduce examples") {
  CHECK(r_reduce(initial_cluster(2, 2), 2, 3, 4) ==
        std::vector<IndexSet>{ix({1}), ix({2})});
  CHECK(r_reduce({}, 1, 2, 4).empty());
  CHECK(r_reduce({ix({1, 2})}, 1, 2, 4).empty());  // contains both -> filtered out
  CHECK_THROWS_AS(r_reduce({}, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("r_reduce sends the initial cluster to the smaller initial cluster") {
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 5; ++n)
      CHECK(r_reduce(initial_cluster(m, n), m, m + 1, m + n) == initial_cluster(m - 1, n - 1));
}
