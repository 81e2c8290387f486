#include "tnngrass/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnn {

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1)
      throw std::invalid_argument("IndexSet: elements must be >= 1");
    if (i > 0 && elements_[i] == elements_[i - 1])
      throw std::invalid_argument("IndexSet: duplicate element " + std::to_string(elements_[i]));
  }
}

IndexSet IndexSet::range(int lo, int hi) {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

int IndexSet::min_element() const {
  if (empty()) throw std::invalid_argument("IndexSet: min of empty set");
  return elements_.front();
}

int IndexSet::max_element() const {
  if (empty()) throw std::invalid_argument("IndexSet: max of empty set");
  return elements_.back();
}

IndexSet IndexSet::with(int x) const {
  if (contains(x)) return *this;
  std::vector<int> v = elements_;
  v.push_back(x);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::without(int x) const {
  std::vector<int> v;
  v.reserve(elements_.size());
  for (int e : elements_)
    if (e != x) v.push_back(e);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::complement_in(int ambient) const {
  std::vector<int> v;
  for (int x = 1; x <= ambient; ++x)
    if (!contains(x)) v.push_back(x);
  return IndexSet(std::move(v));
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<int> v;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                 b.elements().end(), std::back_inserter(v));
  return IndexSet(std::move(v));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  std::vector<int> v;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(v));
  return IndexSet(std::move(v));
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  std::vector<int> v;
  std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(),
                      b.elements().end(), std::back_inserter(v));
  return IndexSet(std::move(v));
}

OrderPreservingMap::OrderPreservingMap(IndexSet domain) : domain_(std::move(domain)) {}

int OrderPreservingMap::apply(int s) const {
  const auto& e = domain_.elements();
  auto it = std::lower_bound(e.begin(), e.end(), s);
  if (it == e.end() || *it != s)
    throw std::invalid_argument("OrderPreservingMap: " + std::to_string(s) + " not in domain");
  return static_cast<int>(it - e.begin()) + 1;
}

int OrderPreservingMap::invert(int k) const {
  if (k < 1 || k > domain_.size())
    throw std::invalid_argument("OrderPreservingMap: rank " + std::to_string(k) + " out of range");
  return domain_.elements()[k - 1];
}

IndexSet OrderPreservingMap::apply(const IndexSet& subset) const {
  std::vector<int> v;
  v.reserve(subset.elements().size());
  for (int s : subset.elements()) v.push_back(apply(s));
  return IndexSet(std::move(v));
}

IndexSet OrderPreservingMap::invert(const IndexSet& subset) const {
  std::vector<int> v;
  v.reserve(subset.elements().size());
  for (int k : subset.elements()) v.push_back(invert(k));
  return IndexSet(std::move(v));
}

std::vector<std::pair<int, int>> consecutive_pairs(const IndexSet& s) {
  std::vector<std::pair<int, int>> out;
  const auto& e = s.elements();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) out.emplace_back(e[i], e[i + 1]);
  return out;
}

std::pair<IndexSet, IndexSet> lattice_min_max(const IndexSet& i, const IndexSet& j) {
  if (i.size() != j.size())
    throw std::invalid_argument("lattice_min_max: size mismatch");
  std::vector<int> lo, hi;
  for (int k = 0; k < i.size(); ++k) {
    lo.push_back(std::min(i.elements()[k], j.elements()[k]));
    hi.push_back(std::max(i.elements()[k], j.elements()[k]));
  }
  return {IndexSet(std::move(lo)), IndexSet(std::move(hi))};
}

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(IndexSet(pick));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace tnn
