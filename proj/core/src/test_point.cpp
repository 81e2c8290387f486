#include "tnngrass/test_point.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <random>
#include <stdexcept>

namespace tnn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// modulo draw keeps the sequence identical across standard libraries
long draw_below(std::mt19937_64& rng, long n) { return static_cast<long>(rng() % static_cast<std::uint64_t>(n)); }

Rational draw_positive_rational(std::mt19937_64& rng, int bound) {
  const long num = 1 + draw_below(rng, bound);
  const long den = 1 + draw_below(rng, bound);
  return rat::make(num, den);
}

void check_params(int size, const BidiagonalParams& p, bool strict) {
  const std::size_t offdiag = static_cast<std::size_t>(size) * (size - 1) / 2;
  if (p.lower.size() != offdiag || p.upper.size() != offdiag ||
      p.diag.size() != static_cast<std::size_t>(size))
    throw std::invalid_argument("bidiagonal factorization: parameter count mismatch");
  for (const Rational& w : p.lower)
    if (w < 0 || (strict && w == 0))
      throw std::invalid_argument("bidiagonal factorization: nonpositive lower weight");
  for (const Rational& w : p.upper)
    if (w < 0 || (strict && w == 0))
      throw std::invalid_argument("bidiagonal factorization: nonpositive upper weight");
  for (const Rational& d : p.diag)
    if (d <= 0) throw std::invalid_argument("bidiagonal factorization: nonpositive diagonal");
}

// M <- M * (I + w E_{p,q}): column q gains w * column p
void right_elementary(RationalMatrix& m, int p, int q, const Rational& w) {
  for (int r = 1; r <= m.rows(); ++r) m.at(r, q) += w * m.at(r, p);
}

// M <- (I + w E_{p,q}) * M: row p gains w * row q
void left_elementary(RationalMatrix& m, int p, int q, const Rational& w) {
  for (int c = 1; c <= m.cols(); ++c) m.at(p, c) += w * m.at(q, c);
}

// Builds the product left to right: lower pass (I + w E_{k+1,k}), upper pass
// (I + w' E_{k,k+1}), then the diagonal.
RationalMatrix factored_matrix(int size, const BidiagonalParams& p) {
  RationalMatrix a = RationalMatrix::identity(size);
  std::size_t li = 0;
  for (int j = 1; j <= size - 1; ++j)
    for (int k = size - 1; k >= j; --k) right_elementary(a, k + 1, k, p.lower[li++]);
  std::size_t ui = 0;
  for (int j = size - 1; j >= 1; --j)
    for (int k = j; k <= size - 1; ++k) right_elementary(a, k, k + 1, p.upper[ui++]);
  for (int c = 1; c <= size; ++c)
    for (int r = 1; r <= size; ++r) a.at(r, c) *= p.diag[c - 1];
  return a;
}

}  // namespace

BidiagonalParams BidiagonalParams::ones(int size) {
  BidiagonalParams p;
  p.lower.assign(static_cast<std::size_t>(size) * (size - 1) / 2, Rational(1));
  p.upper = p.lower;
  p.diag.assign(size, Rational(1));
  return p;
}

RationalMatrix generate_tp_matrix(int size, const BidiagonalParams& params) {
  if (size < 1) throw std::invalid_argument("generate_tp_matrix: size must be >= 1");
  check_params(size, params, /*strict=*/true);
  return factored_matrix(size, params);
}

RationalMatrix generate_tnn_matrix(int size, const BidiagonalParams& params) {
  if (size < 1) throw std::invalid_argument("generate_tnn_matrix: size must be >= 1");
  check_params(size, params, /*strict=*/false);
  return factored_matrix(size, params);
}

RationalMatrix embed_matrix(const RationalMatrix& a) {
  const int n = a.rows(), m = a.cols();
  RationalMatrix out(m + n, m);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= m; ++c) out.at(r, c) = a.at(r, c);
  for (int i = 1; i <= m; ++i) out.at(n + i, m - i + 1) = (i % 2 == 1) ? 1 : -1;
  return out;
}

Rational plucker_coordinate(const RationalMatrix& mtx, const IndexSet& i) {
  if (i.size() != mtx.cols())
    throw std::invalid_argument("plucker_coordinate: |I| must equal the column count");
  return determinant(mtx.submatrix(i, IndexSet::range(1, mtx.cols())));
}

namespace {

BidiagonalParams draw_bidiagonal(std::mt19937_64& rng, int size, int bound) {
  BidiagonalParams p = BidiagonalParams::ones(size);
  for (Rational& w : p.lower) w = draw_positive_rational(rng, bound);
  for (Rational& w : p.upper) w = draw_positive_rational(rng, bound);
  for (Rational& d : p.diag) d = draw_positive_rational(rng, bound);
  return p;
}

}  // namespace

TestPoint realize_test_point(const GrassmannContext& ctx, const TestPointParams& params) {
  const int m = ctx.m, n = ctx.n;
  if (params.mode == SampleMode::embedded) {
    RationalMatrix square = generate_tp_matrix(n, params.tp);
    RationalMatrix block = square.submatrix(IndexSet::range(1, n), IndexSet::range(1, m));
    return {ctx, params, embed_matrix(block)};
  }

  if (params.row_selection.size() != m ||
      (!params.row_selection.empty() && params.row_selection.max_element() > n))
    throw std::invalid_argument("realize_test_point: row selection must pick m rows among [n]");
  if (params.d_diag.size() != static_cast<std::size_t>(m) ||
      params.l_diag.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("realize_test_point: diagonal size mismatch");
  for (const Rational& d : params.d_diag)
    if (d <= 0) throw std::invalid_argument("realize_test_point: nonpositive diagonal");
  for (const Rational& l : params.l_diag)
    if (l <= 0) throw std::invalid_argument("realize_test_point: nonpositive diagonal");

  RationalMatrix b(m + n, m);
  for (int j = 1; j <= m; ++j) b.at(params.row_selection.elements()[j - 1], j) = params.d_diag[j - 1];
  for (int i = 1; i <= m; ++i)
    b.at(n + i, m - i + 1) = ((i % 2 == 1) ? params.l_diag[i - 1] : -params.l_diag[i - 1]);

  // factors in the record are listed in application order: first entry acts first
  for (const ElementaryFactor& f : params.word) {
    if (std::abs(f.u - f.v) != 1 || f.u < 1 || f.v < 1 || f.u > m + n || f.v > m + n)
      throw std::invalid_argument("realize_test_point: factor indices must be adjacent in [m+n]");
    if (f.weight <= 0) throw std::invalid_argument("realize_test_point: nonpositive factor weight");
    left_elementary(b, f.u, f.v, f.weight);
  }
  return {ctx, params, std::move(b)};
}

TestPoint generate_test_point(const GrassmannContext& ctx, SampleMode mode,
                              unsigned long seed, int weight_bound) {
  if (ctx.m < 1) throw std::invalid_argument("generate_test_point: degenerate context");
  if (weight_bound < 1) throw std::invalid_argument("generate_test_point: weight bound must be >= 1");
  std::mt19937_64 rng(splitmix64(seed));
  TestPointParams params;
  params.mode = mode;
  params.seed = seed;

  if (mode == SampleMode::embedded) {
    params.tp = draw_bidiagonal(rng, ctx.n, weight_bound);
    return realize_test_point(ctx, params);
  }

  const long word_len = draw_below(rng, 2 * (ctx.m + ctx.n) + 1);
  for (long i = 0; i < word_len; ++i) {
    const int p = 1 + static_cast<int>(draw_below(rng, ctx.ambient() - 1));
    const bool down = draw_below(rng, 2) == 0;
    params.word.push_back({down ? p + 1 : p, down ? p : p + 1, draw_positive_rational(rng, weight_bound)});
  }
  std::vector<int> rows(ctx.n);
  for (int i = 0; i < ctx.n; ++i) rows[i] = i + 1;
  for (int i = 0; i < ctx.m; ++i) {
    const long j = i + draw_below(rng, ctx.n - i);
    std::swap(rows[i], rows[j]);
  }
  rows.resize(ctx.m);
  params.row_selection = IndexSet(std::move(rows));
  for (int i = 0; i < ctx.m; ++i) {
    params.d_diag.push_back(draw_positive_rational(rng, weight_bound));
    params.l_diag.push_back(draw_positive_rational(rng, weight_bound));
  }
  return realize_test_point(ctx, params);
}

PluckerCache::PluckerCache(RationalMatrix mtx) : mtx_(std::move(mtx)) {}

const Rational& PluckerCache::coordinate(const IndexSet& rows) {
  auto it = memo_.find(rows);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(rows, plucker_coordinate(mtx_, rows)).first->second;
}

Rational evaluate_expression(const QuadExpression& e, PluckerCache& cache) {
  if (cache.matrix().rows() != e.context().ambient() || cache.matrix().cols() != e.context().m)
    throw std::invalid_argument("evaluate_expression: context does not match the point");
  Rational total(0);
  for (const QuadTerm& t : e.terms()) {
    if (t.coeff == 0) continue;
    total += t.coeff * cache.coordinate(t.I) * cache.coordinate(t.J);
  }
  return total;
}

Rational evaluate_expression(const QuadExpression& e, const TestPoint& pt) {
  if (pt.ctx != e.context())
    throw std::invalid_argument("evaluate_expression: context mismatch");
  PluckerCache cache(pt.matrix);
  return evaluate_expression(e, cache);
}

namespace {

TestPoint falsify_trial_point(const GrassmannContext& ctx, unsigned long seed, long trial) {
  TestPointParams params;
  params.mode = SampleMode::embedded;
  params.seed = seed;
  if (trial == 0) {
    params.tp = BidiagonalParams::ones(ctx.n);
  } else {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
    const int bound = static_cast<int>(2 + trial / 8);  // grid grows with the trial index
    params.tp = draw_bidiagonal(rng, ctx.n, bound);
  }
  return realize_test_point(ctx, params);
}

std::optional<FalsifyResult> falsify_range(const QuadExpression& e, unsigned long seed,
                                           long lo, long hi) {
  for (long t = lo; t < hi; ++t) {
    TestPoint pt = falsify_trial_point(e.context(), seed, t);
    Rational value = evaluate_expression(e, pt);
    if (value < 0) return FalsifyResult{std::move(pt), std::move(value), t};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FalsifyResult> falsify(const QuadExpression& e, long budget,
                                     unsigned long seed, int threads) {
  if (e.context().m < 1) {  // scalar expressions have nothing to sample
    return std::nullopt;
  }
  if (threads <= 1) return falsify_range(e, seed, 0, budget);

  const long chunk = 16;
  for (long base = 0; base < budget; base += chunk * threads) {
    std::vector<std::future<std::optional<FalsifyResult>>> futures;
    for (int w = 0; w < threads; ++w) {
      const long lo = base + w * chunk;
      const long hi = std::min(budget, lo + chunk);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, [&e, seed, lo, hi] {
        return falsify_range(e, seed, lo, hi);
      }));
    }
    std::optional<FalsifyResult> best;
    for (auto& f : futures) {
      auto r = f.get();
      if (r && (!best || r->trial < best->trial)) best = std::move(r);
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace tnn
