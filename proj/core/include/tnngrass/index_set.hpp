#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tnn {

/// A strictly increasing set of positive integers; the row-index set of one
/// Pluecker coordinate. Immutable after construction.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts the input; throws std::invalid_argument on duplicates or
  /// elements < 1.
  explicit IndexSet(std::vector<int> elements);

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static IndexSet range(int lo, int hi);

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  bool contains(int x) const;
  int min_element() const;  // throws when empty
  int max_element() const;  // throws when empty

  IndexSet with(int x) const;     // insert (no-op if present)
  IndexSet without(int x) const;  // erase (no-op if absent)
  IndexSet complement_in(int ambient) const;

  bool operator==(const IndexSet& other) const { return elements_ == other.elements_; }
  bool operator!=(const IndexSet& other) const { return !(*this == other); }
  bool operator<(const IndexSet& other) const { return elements_ < other.elements_; }

  std::string to_string() const;  // "{1,3,4}"

 private:
  std::vector<int> elements_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

/// The unique order preserving bijection S -> [|S|], with its inverse.
class OrderPreservingMap {
 public:
  explicit OrderPreservingMap(IndexSet domain);

  int apply(int s) const;   // throws when s is not in the domain
  int invert(int k) const;  // throws when k is outside [|S|]
  IndexSet apply(const IndexSet& subset) const;
  IndexSet invert(const IndexSet& subset) const;

  const IndexSet& domain() const { return domain_; }
  int size() const { return domain_.size(); }

 private:
  IndexSet domain_;
};

/// All pairs (u,v), u < v in S, with no element of S strictly between them.
/// |S|-1 pairs; empty when |S| < 2.
std::vector<std::pair<int, int>> consecutive_pairs(const IndexSet& s);

/// Entrywise (min, max) on the sorted sequences. Throws on size mismatch.
std::pair<IndexSet, IndexSet> lattice_min_max(const IndexSet& i, const IndexSet& j);

/// All k-element subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int k);

}  // namespace tnn
