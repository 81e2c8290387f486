#include "tnngrass/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tnn {

int StarMap::apply(int u) const {
  if (u < 1 || u > 2 * eta)
    throw std::invalid_argument("StarMap: " + std::to_string(u) + " outside [2*eta]");
  return 2 * eta + 1 - u;
}

IndexSet StarMap::apply(const IndexSet& s) const {
  std::vector<int> v;
  v.reserve(s.elements().size());
  for (int u : s.elements()) v.push_back(apply(u));
  return IndexSet(std::move(v));
}

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::vector<int> all;
  for (auto& p : pairs_) {
    if (p.first == p.second)
      throw std::invalid_argument("Matching: degenerate pair");
    if (p.first > p.second) std::swap(p.first, p.second);
    all.push_back(p.first);
    all.push_back(p.second);
  }
  std::sort(pairs_.begin(), pairs_.end());
  ground_ = IndexSet(std::move(all));  // rejects repeated elements
}

Matching Matching::star_image(const StarMap& star) const {
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(pairs_.size());
  for (const auto& [u, v] : pairs_) mapped.emplace_back(star.apply(u), star.apply(v));
  return Matching(std::move(mapped));
}

std::string Matching::to_string() const {
  std::string out;
  for (const auto& [u, v] : pairs_)
    out += "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  return out.empty() ? "{}" : out;
}

bool is_noncrossing(const Matching& m) {
  const auto& ps = m.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto [a, c] = ps[i];
      const auto [b, d] = ps[j];
      if (a < b && b < c && c < d) return false;
    }
  return true;
}

namespace {

bool removable(const std::pair<int, int>& p, const std::vector<int>& ground) {
  auto lo = std::upper_bound(ground.begin(), ground.end(), p.first);
  auto hi = std::lower_bound(ground.begin(), ground.end(), p.second);
  return lo == hi;  // nothing strictly between
}

bool removal_search(const std::vector<std::pair<int, int>>& pairs, unsigned mask,
                    std::set<unsigned>& dead) {
  if (mask == 0) return true;
  if (dead.count(mask)) return false;
  std::vector<int> ground;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask & (1u << i)) {
      ground.push_back(pairs[i].first);
      ground.push_back(pairs[i].second);
    }
  std::sort(ground.begin(), ground.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (removable(pairs[i], ground) && removal_search(pairs, mask & ~(1u << i), dead))
      return true;
  }
  dead.insert(mask);
  return false;
}

}  // namespace

bool is_removal_buildable(const Matching& m) {
  const auto& ps = m.pairs();
  if (ps.size() > 20)
    throw std::invalid_argument("is_removal_buildable: matching too large");
  std::set<unsigned> dead;
  return removal_search(ps, (1u << ps.size()) - 1u, dead);
}

namespace {

// Smallest element pairs with a partner at odd offset; the enclosed block and
// the tail are matched recursively. Concatenation in this order is already
// lexicographic on the canonical pair lists.
void enumerate_rec(const std::vector<int>& elems, std::size_t lo, std::size_t hi,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out);

void cross_product(const std::vector<int>& elems, std::size_t in_lo, std::size_t in_hi,
                   std::size_t out_lo, std::size_t out_hi,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (in_lo >= in_hi) {
    enumerate_rec(elems, out_lo, out_hi, acc, out);
    return;
  }
  std::vector<std::vector<std::pair<int, int>>> inner;
  std::vector<std::pair<int, int>> inner_acc;
  enumerate_rec(elems, in_lo, in_hi, inner_acc, inner);
  for (const auto& mi : inner) {
    const std::size_t mark = acc.size();
    acc.insert(acc.end(), mi.begin(), mi.end());
    enumerate_rec(elems, out_lo, out_hi, acc, out);
    acc.resize(mark);
  }
}

void enumerate_rec(const std::vector<int>& elems, std::size_t lo, std::size_t hi,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo >= hi) {
    out.push_back(acc);
    return;
  }
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    acc.emplace_back(elems[lo], elems[j]);
    cross_product(elems, lo + 1, j, j + 1, hi, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const IndexSet& ground, MatchingMode mode,
                                          const std::optional<StarMap>& star) {
  if (ground.size() % 2 != 0)
    throw std::invalid_argument("enumerate_matchings: odd ground set");

  const auto& elems = ground.elements();
  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<std::pair<int, int>> acc;
  enumerate_rec(elems, 0, elems.size(), acc, raw);

  // In symmetric mode the star is applied through the order preserving
  // relabeling of the ground set, so only position reversal matters.
  OrderPreservingMap phi{ground};
  const int two_eta = ground.size();
  auto reverse_of = [&](int s) {
    if (star) return star->apply(s);
    return phi.invert(two_eta + 1 - phi.apply(s));
  };
  if (mode == MatchingMode::symmetric && star) {
    if (star->apply(ground) != ground)
      throw std::invalid_argument("enumerate_matchings: ground set not star-invariant");
  }

  std::vector<Matching> out;
  out.reserve(raw.size());
  for (auto& pairs : raw) {
    Matching m(std::move(pairs));
    if (mode == MatchingMode::symmetric) {
      std::vector<std::pair<int, int>> mapped;
      mapped.reserve(m.pairs().size());
      for (const auto& [u, v] : m.pairs()) mapped.emplace_back(reverse_of(u), reverse_of(v));
      if (Matching(std::move(mapped)) != m) continue;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tnn
