#include <doctest.h>

#include <set>

#include "testutil.hpp"
#include "tnngrass/matching.hpp"

using namespace tnn;
using namespace tnn::testutil;

TEST_CASE("matching canonical form") {
  Matching m({{4, 3}, {1, 2}});
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(m.ground() == ix({1, 2, 3, 4}));
  CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Matching({{1, 1}}), std::invalid_argument);
  CHECK(Matching{}.ground().empty());
}

TEST_CASE("star map") {
  StarMap star(3);
  CHECK(star.apply(1) == 6);
  CHECK(star.apply(6) == 1);
  CHECK(star.apply(star.apply(4)) == 4);  // involutive
  CHECK_THROWS_AS(star.apply(7), std::invalid_argument);
  CHECK(matching({{1, 2}, {3, 4}, {5, 6}}).star_image(star) ==
        matching({{5, 6}, {3, 4}, {1, 2}}));
}

TEST_CASE("plain enumeration, small cases") {
  CHECK(enumerate_matchings(ix({1, 2, 3, 4})) ==
        std::vector<Matching>{matching({{1, 2}, {3, 4}}), matching({{1, 4}, {2, 3}})});

  // eta = 3, lexicographic order
  CHECK(enumerate_matchings(IndexSet::range(1, 6)) ==
        std::vector<Matching>{matching({{1, 2}, {3, 4}, {5, 6}}),
                              matching({{1, 2}, {3, 6}, {4, 5}}),
                              matching({{1, 4}, {2, 3}, {5, 6}}),
                              matching({{1, 6}, {2, 3}, {4, 5}}),
                              matching({{1, 6}, {2, 5}, {3, 4}})});

  // the five matchings named in the expression examples are exactly these
  const std::set<Matching> expected{matching({{1, 2}, {3, 4}, {5, 6}}),
                                    matching({{1, 2}, {3, 6}, {4, 5}}),
                                    matching({{1, 6}, {2, 3}, {4, 5}}),
                                    matching({{1, 6}, {2, 5}, {3, 4}}),
                                    matching({{1, 4}, {2, 3}, {5, 6}})};
  auto got = enumerate_matchings(IndexSet::range(1, 6));
  CHECK(std::set<Matching>(got.begin(), got.end()) == expected);

  CHECK(enumerate_matchings(IndexSet{}).size() == 1);  // the empty matching
  CHECK_THROWS_AS(enumerate_matchings(ix({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("enumeration works on sparse ground sets") {
  auto ms = enumerate_matchings(ix({2, 5, 9, 14}));
  CHECK(ms == std::vector<Matching>{matching({{2, 5}, {9, 14}}), matching({{2, 14}, {5, 9}})});
}

TEST_CASE("symmetric enumeration") {
  auto ms = enumerate_matchings(IndexSet::range(1, 6), MatchingMode::symmetric, StarMap(3));
  CHECK(ms == std::vector<Matching>{matching({{1, 2}, {3, 4}, {5, 6}}),
                                    matching({{1, 6}, {2, 3}, {4, 5}}),
                                    matching({{1, 6}, {2, 5}, {3, 4}})});

  // default star is the reversal of the ground set
  CHECK(enumerate_matchings(IndexSet::range(1, 6), MatchingMode::symmetric) == ms);

  // a star that does not preserve the ground set is rejected
  CHECK_THROWS_AS(enumerate_matchings(ix({1, 2, 3, 5}), MatchingMode::symmetric, StarMap(3)),
                  std::invalid_argument);
}

TEST_CASE("matching counts: Catalan and central binomial") {
  const long catalan_expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  const long symmetric_expected[] = {1, 2, 3, 6, 10, 20, 35, 70};
  for (int eta = 1; eta <= 8; ++eta) {
    auto ground = IndexSet::range(1, 2 * eta);
    CHECK(enumerate_matchings(ground).size() ==
          static_cast<std::size_t>(catalan_expected[eta - 1]));
    CHECK(enumerate_matchings(ground, MatchingMode::symmetric).size() ==
          static_cast<std::size_t>(symmetric_expected[eta - 1]));
    CHECK(catalan(eta) == catalan_expected[eta - 1]);
    CHECK(binomial(eta, eta / 2) == symmetric_expected[eta - 1]);
  }
}

TEST_CASE("removal characterization agrees with the noncrossing one, exhaustively") {
  for (int eta = 1; eta <= 6; ++eta) {
    long noncrossing_count = 0;
    for (const Matching& m : all_perfect_matchings(IndexSet::range(1, 2 * eta))) {
      const bool a = is_noncrossing(m);
      const bool b = is_removal_buildable(m);
      CHECK(a == b);
      if (a) ++noncrossing_count;
    }
    CHECK(noncrossing_count == catalan(eta));
  }
}

TEST_CASE("every enumerated matching passes both predicates") {
  for (int eta = 1; eta <= 6; ++eta)
    for (const Matching& m : enumerate_matchings(IndexSet::range(1, 2 * eta))) {
      CHECK(is_noncrossing(m));
      CHECK(is_removal_buildable(m));
    }
  // and on a sparse ground set
  for (const Matching& m : enumerate_matchings(ix({3, 4, 8, 11, 12, 20}))) {
    CHECK(is_noncrossing(m));
    CHECK(is_removal_buildable(m));
  }
}
