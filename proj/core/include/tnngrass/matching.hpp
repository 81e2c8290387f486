#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnngrass/index_set.hpp"

namespace tnn {

/// The order reversing involution u -> 2*eta+1-u on [2*eta].
struct StarMap {
  int eta = 0;

  explicit StarMap(int eta_) : eta(eta_) {}
  int apply(int u) const;  // throws when u is outside [2*eta]
  IndexSet apply(const IndexSet& s) const;
};

/// A perfect pairing of an even-size integer set. Certificates only ever use
/// pairings buildable by successive removal of consecutive pairs, which
/// coincide with the noncrossing ones; both predicates are exposed below and
/// their agreement is a tested invariant, not an assumption.
class Matching {
 public:
  Matching() = default;  // the empty matching
  /// Canonicalizes each pair as (lo,hi) and sorts pairs by lo.
  /// Throws when an element occurs twice.
  explicit Matching(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const IndexSet& ground() const { return ground_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  /// Image under a star map (pairs mapped elementwise, re-canonicalized).
  Matching star_image(const StarMap& star) const;

  bool operator==(const Matching& other) const { return pairs_ == other.pairs_; }
  bool operator!=(const Matching& other) const { return !(*this == other); }
  bool operator<(const Matching& other) const { return pairs_ < other.pairs_; }

  std::string to_string() const;  // "{1,2}{3,4}"

 private:
  std::vector<std::pair<int, int>> pairs_;
  IndexSet ground_;
};

/// No two pairs {a,c},{b,d} with a < b < c < d.
bool is_noncrossing(const Matching& m);

/// There is an ordering of the pairs in which each pair is consecutive in the
/// ground set minus all earlier pairs. Exact memoized search over removal
/// orders.
bool is_removal_buildable(const Matching& m);

enum class MatchingMode { plain, symmetric };

/// Noncrossing perfect matchings of `ground`, in lexicographic order on the
/// canonical pair lists (Catalan-many). In symmetric mode only the matchings
/// invariant under the star map survive; the default star is the order
/// reversal of the ground set itself. A supplied star must leave the ground
/// set invariant.
///
/// Throws on odd |ground| and on a non-star-invariant ground set.
std::vector<Matching> enumerate_matchings(const IndexSet& ground,
                                          MatchingMode mode = MatchingMode::plain,
                                          const std::optional<StarMap>& star = std::nullopt);

}  // namespace tnn
