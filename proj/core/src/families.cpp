#include "tnngrass/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnn {

QuadExpression logsupmod_expression(const IndexSet& i, const IndexSet& j,
                                    const GrassmannContext& ctx) {
  if (i.size() != ctx.m || j.size() != ctx.m)
    throw std::invalid_argument("logsupmod_expression: |I| and |J| must equal m");
  auto [lo, hi] = lattice_min_max(i, j);
  const bool degenerate = (lo == i && hi == j) || (lo == j && hi == i);
  std::vector<QuadTerm> terms;
  if (!degenerate) {
    terms.push_back({Rational(1), lo, hi});
    terms.push_back({Rational(-1), i, j});
  }
  return QuadExpression(ctx, std::move(terms));
}

IndexSet minor_to_plucker(const IndexSet& p, const IndexSet& q, int m, int n) {
  if (p.size() != q.size())
    throw std::invalid_argument("minor_to_plucker: |P| != |Q|");
  if (!p.empty() && p.max_element() > n)
    throw std::invalid_argument("minor_to_plucker: P outside [n]");
  if (!q.empty() && q.max_element() > m)
    throw std::invalid_argument("minor_to_plucker: Q outside [m]");
  IndexSet out = p;
  for (int jj = 1; jj <= m; ++jj)
    if (!q.contains(jj)) out = out.with(m + n + 1 - jj);
  return out;
}

QuadExpression lpp_expression(const IndexSet& p, const IndexSet& q, const IndexSet& r,
                              const IndexSet& s, int n) {
  const int k = p.size();
  if (q.size() != k || r.size() != k || s.size() != k)
    throw std::invalid_argument("lpp_expression: P, Q, R, S must have equal size");
  for (const IndexSet* x : {&p, &q, &r, &s})
    if (!x->empty() && x->max_element() > n)
      throw std::invalid_argument("lpp_expression: subsets must lie in [n]");

  const GrassmannContext ctx(n, n);
  const IndexSet i1 = minor_to_plucker(p, q, n, n);
  const IndexSet i2 = minor_to_plucker(r, s, n, n);
  const auto [pr_lo, pr_hi] = lattice_min_max(p, r);
  const auto [qs_lo, qs_hi] = lattice_min_max(q, s);
  const IndexSet i_min = minor_to_plucker(pr_lo, qs_lo, n, n);
  const IndexSet i_max = minor_to_plucker(pr_hi, qs_hi, n, n);

  const bool degenerate = (i_min == i1 && i_max == i2) || (i_min == i2 && i_max == i1);
  std::vector<QuadTerm> terms;
  if (!degenerate) {
    terms.push_back({Rational(1), i_min, i_max});
    terms.push_back({Rational(-1), i1, i2});
  }
  return QuadExpression(ctx, std::move(terms));
}

std::vector<IndexSet> bj_index_family(int n, int k) {
  std::vector<IndexSet> out;
  for (const IndexSet& p : subsets_of_size(n, k)) {
    IndexSet i = p;
    for (int x = n + 1; x <= 2 * n; ++x)
      if (!p.contains(2 * n + 1 - x)) i = i.with(x);
    out.push_back(std::move(i));
  }
  return out;
}

QuadExpression bj_expression(int n, int k) {
  if (n < 2 || k < 0 || k > n / 2 - 1)
    throw std::invalid_argument("bj_expression: need n >= 2 and 0 <= k <= floor(n/2)-1");

  auto binomial = [](int nn, int kk) {
    Integer b(1);
    for (int i = 1; i <= kk; ++i) b = b * (nn - i + 1) / i;
    return b;
  };

  std::vector<QuadTerm> terms;
  const Rational low_coeff = -Rational(1) / Rational(binomial(n, k));
  for (const IndexSet& i : bj_index_family(n, k))
    terms.push_back({low_coeff, i, i.complement_in(2 * n)});
  const Rational high_coeff = Rational(1) / Rational(binomial(n, k + 1));
  for (const IndexSet& i : bj_index_family(n, k + 1))
    terms.push_back({high_coeff, i, i.complement_in(2 * n)});
  return QuadExpression(GrassmannContext(n, n), std::move(terms));
}

LatticeClosureResult check_lattice_closure(const std::vector<IndexSet>& sets) {
  for (std::size_t a = 1; a < sets.size(); ++a)
    if (sets[a].size() != sets[0].size())
      throw std::invalid_argument("check_lattice_closure: sets of unequal size");

  std::vector<IndexSet> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const IndexSet& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };

  LatticeClosureResult result;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      auto [lo, hi] = lattice_min_max(sets[a], sets[b]);
      for (const IndexSet* probe : {&lo, &hi}) {
        if (member(*probe)) continue;
        result.closed = false;
        result.witness = {sets[a], sets[b]};
        result.missing = *probe;
        return result;
      }
    }
  return result;
}

std::vector<IndexSet> positroid(PluckerCache& cache, const GrassmannContext& ctx) {
  std::vector<IndexSet> out;
  for (const IndexSet& i : subsets_of_size(ctx.ambient(), ctx.m))
    if (cache.coordinate(i) != 0) out.push_back(i);
  return out;
}

}  // namespace tnn
