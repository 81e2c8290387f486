#include "tnngrass/temperley_lieb.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnn {

std::vector<int> TLWord::letters() const {
  std::vector<int> out;
  for (const auto& [a, b] : runs)
    for (int i = a; i >= b; --i) out.push_back(i);
  return out;
}

std::string TLWord::to_string() const {
  const auto ls = letters();
  if (ls.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += " ";
    out += "t" + std::to_string(ls[i]);
  }
  return out;
}

TLElement TLElement::unit() {
  TLElement e;
  e.add(TLWord{}, 1);
  return e;
}

TLElement TLElement::generator(int i) {
  if (i < 1) throw std::invalid_argument("TLElement: generator index must be >= 1");
  TLElement e;
  e.add(TLWord{{{i, i}}}, 1);
  return e;
}

Rational TLElement::coefficient(const TLWord& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TLElement::add(const TLWord& w, const Rational& c) {
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

TLElement TLElement::operator+(const TLElement& o) const {
  TLElement out = *this;
  for (const auto& [w, c] : o.coeffs_) out.add(w, c);
  return out;
}

TLElement TLElement::operator-(const TLElement& o) const {
  TLElement out = *this;
  for (const auto& [w, c] : o.coeffs_) out.add(w, -c);
  return out;
}

std::string TLElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + rat::to_string(c) + ")*" + w.to_string();
  }
  return out;
}

namespace {

// Boundary matching of a single generator under the 2n-cycle labeling.
Matching generator_diagram(int i, int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(i, i + 1);
  pairs.emplace_back(2 * n - i, 2 * n + 1 - i);
  for (int j = 1; j <= n; ++j)
    if (j != i && j != i + 1) pairs.emplace_back(j, 2 * n + 1 - j);
  return Matching(std::move(pairs));
}

Matching unit_diagram(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j) pairs.emplace_back(j, 2 * n + 1 - j);
  return Matching(std::move(pairs));
}

struct ConcatResult {
  Matching matching;
  int loops = 0;
};

// Glues a's right boundary level by level onto b's left boundary and traces
// strands. Left points keep their labels, as do b's right points; every
// closed loop in the middle is one factor of the loop value.
ConcatResult tl_concat(const Matching& a, const Matching& b, int n) {
  const int two_n = 2 * n;
  auto partner_of = [two_n](const Matching& m) {
    std::vector<int> partner(two_n + 1, 0);
    for (const auto& [u, v] : m.pairs()) {
      partner[u] = v;
      partner[v] = u;
    }
    return partner;
  };
  const std::vector<int> pa = partner_of(a), pb = partner_of(b);
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(two_n + 1, false));

  auto is_boundary = [n](int side, int label) { return side == 0 ? label <= n : label > n; };

  std::vector<std::pair<int, int>> pairs;
  auto trace = [&](int side, int label) {
    const int start = label;
    while (true) {
      seen[side][label] = true;
      label = (side == 0 ? pa : pb)[label];
      seen[side][label] = true;
      if (is_boundary(side, label)) {
        pairs.emplace_back(start, label);
        return;
      }
      label = two_n + 1 - label;  // glue to the other diagram
      side = 1 - side;
    }
  };
  for (int x = 1; x <= n; ++x)
    if (!seen[0][x]) trace(0, x);
  for (int y = n + 1; y <= two_n; ++y)
    if (!seen[1][y]) trace(1, y);

  int loops = 0;
  for (int side = 0; side < 2; ++side)
    for (int label = 1; label <= two_n; ++label) {
      if (seen[side][label]) continue;
      ++loops;
      int cs = side, cl = label;
      while (!seen[cs][cl]) {
        seen[cs][cl] = true;
        cl = (cs == 0 ? pa : pb)[cl];
        seen[cs][cl] = true;
        cl = two_n + 1 - cl;
        cs = 1 - cs;
      }
    }
  return {Matching(std::move(pairs)), loops};
}

void enumerate_normal_forms(int n, std::vector<std::pair<int, int>>& current,
                            std::vector<TLWord>& out) {
  out.push_back(TLWord{current});
  const int start_min = current.empty() ? 1 : current.back().first + 1;
  const int end_min = current.empty() ? 1 : current.back().second + 1;
  for (int a = start_min; a <= n - 1; ++a)
    for (int b = end_min; b <= a; ++b) {
      current.emplace_back(a, b);
      enumerate_normal_forms(n, current, out);
      current.pop_back();
    }
}

}  // namespace

TLContext::TLContext(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("TLContext: n must be >= 1");
  std::vector<std::pair<int, int>> current;
  enumerate_normal_forms(n, current, basis_);
  std::sort(basis_.begin(), basis_.end());

  for (const TLWord& w : basis_) {
    Matching d = unit_diagram(n);
    for (int letter : w.letters()) {
      ConcatResult r = tl_concat(d, generator_diagram(letter, n), n);
      if (r.loops != 0)
        throw std::logic_error("TLContext: normal form word produced a closed loop");
      d = std::move(r.matching);
    }
    if (!diagram_to_word_.emplace(d, w).second)
      throw std::logic_error("TLContext: two normal form words share a diagram");
    word_to_diagram_.emplace(w, std::move(d));
  }
}

const Matching& TLContext::diagram(const TLWord& w) const {
  auto it = word_to_diagram_.find(w);
  if (it == word_to_diagram_.end())
    throw std::invalid_argument("TLContext: unknown basis word " + w.to_string());
  return it->second;
}

const TLWord& TLContext::word(const Matching& m) const {
  auto it = diagram_to_word_.find(m);
  if (it == diagram_to_word_.end())
    throw std::invalid_argument("TLContext: matching is not a basis diagram: " + m.to_string());
  return it->second;
}

TLElement tl_multiply(const TLElement& a, const TLElement& b, TLContext& ctx) {
  TLElement out;
  for (const auto& [wa, ca] : a.coefficients())
    for (const auto& [wb, cb] : b.coefficients()) {
      ConcatResult r = tl_concat(ctx.diagram(wa), ctx.diagram(wb), ctx.n());
      Rational c = ca * cb;
      for (int l = 0; l < r.loops; ++l) c *= 2;  // loop value of the algebra
      out.add(ctx.word(r.matching), c);
    }
  return out;
}

Matching tl_to_matching(const TLWord& tau, TLContext& ctx) { return ctx.diagram(tau); }

std::vector<int> reduced_word(const PermutationTable& w) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> hit(n + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || hit[x])
      throw std::invalid_argument("reduced_word: not a permutation");
    hit[x] = true;
  }
  PermutationTable v = w;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

const TLElement& TLContext::sigma(const PermutationTable& w) {
  auto it = sigma_memo_.find(w);
  if (it != sigma_memo_.end()) return it->second;
  TLElement image = TLElement::unit();
  for (int letter : reduced_word(w))
    image = tl_multiply(image, TLElement::generator(letter) - TLElement::unit(), *this);
  return sigma_memo_.emplace(w, std::move(image)).first->second;
}

TLElement sigma_map(const PermutationTable& w, TLContext& ctx) { return ctx.sigma(w); }

std::map<TLWord, int> b_vector(const IndexSet& i, TLContext& ctx) {
  const int n = ctx.n();
  if (i.size() != n || (!i.empty() && i.max_element() > 2 * n))
    throw std::invalid_argument("b_vector: need an n-subset of [2n]");
  std::map<TLWord, int> out;
  for (const TLWord& tau : ctx.basis()) {
    bool all_split = true;
    for (const auto& [u, v] : ctx.diagram(tau).pairs())
      if (i.contains(u) == i.contains(v)) {  // both in I or both in the complement
        all_split = false;
        break;
      }
    out.emplace(tau, all_split ? 1 : 0);
  }
  return out;
}

namespace {

// Term of a symbolic maximal-minor expansion: the monomial (variable rows
// with their assigned columns) and its constant coefficient.
struct SymbolicTerm {
  std::vector<std::pair<int, int>> monomial;  // (row, col), rows increasing
  Rational coeff;
};

int sign_of_sorted_assignment(const std::vector<int>& cols) {
  int sign = 1;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] > cols[j]) sign = -sign;
  return sign;
}

// Expands det of the rows I of [x ; W0] over the n x n variable matrix x.
// Rows of W0 force their column; the variable rows range over the remaining
// columns.
std::vector<SymbolicTerm> expand_embedded_minor(const IndexSet& rows, int n) {
  std::vector<int> var_rows, w0_rows;
  for (int r : rows.elements()) (r <= n ? var_rows : w0_rows).push_back(r);

  std::vector<int> forced_col(rows.size(), 0);  // per position in the submatrix
  Rational w0_constant(1);
  std::vector<bool> col_used(n + 1, false);
  for (int r : w0_rows) {
    const int i = r - n;                 // W0 row index
    const int col = n - i + 1;           // its unique nonzero column
    if (col_used[col]) return {};        // repeated forced column: minor is 0
    col_used[col] = true;
    w0_constant *= (i % 2 == 1) ? 1 : -1;
  }

  std::vector<int> free_cols;
  for (int c = 1; c <= n; ++c)
    if (!col_used[c]) free_cols.push_back(c);
  if (free_cols.size() != var_rows.size())
    throw std::logic_error("expand_embedded_minor: column bookkeeping failed");

  // positions of the rows inside the submatrix, in increasing row order
  const auto& sorted_rows = rows.elements();
  std::vector<SymbolicTerm> out;
  std::vector<int> perm(free_cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    std::vector<int> assigned_cols(sorted_rows.size(), 0);
    std::vector<std::pair<int, int>> monomial;
    std::size_t vi = 0;
    for (std::size_t pos = 0; pos < sorted_rows.size(); ++pos) {
      const int r = sorted_rows[pos];
      if (r <= n) {
        const int col = free_cols[perm[vi++]];
        assigned_cols[pos] = col;
        monomial.emplace_back(r, col);
      } else {
        assigned_cols[pos] = n - (r - n) + 1;
      }
    }
    SymbolicTerm term;
    term.monomial = std::move(monomial);
    term.coeff = w0_constant * sign_of_sorted_assignment(assigned_cols);
    out.push_back(std::move(term));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::map<PermutationTable, Rational> product_coefficients(const IndexSet& i, int n) {
  if (i.size() != n || (!i.empty() && i.max_element() > 2 * n))
    throw std::invalid_argument("product_coefficients: need an n-subset of [2n]");
  const IndexSet ic = i.complement_in(2 * n);
  const auto left = expand_embedded_minor(i, n);
  const auto right = expand_embedded_minor(ic, n);

  std::map<PermutationTable, Rational> out;
  for (const SymbolicTerm& lt : left)
    for (const SymbolicTerm& rt : right) {
      PermutationTable w(n, 0);
      std::vector<bool> col_used(n + 1, false);
      bool proper = true;
      for (const auto& list : {lt.monomial, rt.monomial})
        for (const auto& [row, col] : list) {
          if (w[row - 1] != 0 || col_used[col]) {
            proper = false;
            break;
          }
          w[row - 1] = col;
          col_used[col] = true;
        }
      if (!proper)
        throw std::logic_error("product_coefficients: monomial is not a permutation monomial");
      for (int x : w)
        if (x == 0) throw std::logic_error("product_coefficients: monomial misses a row");
      auto [it, inserted] = out.emplace(std::move(w), lt.coeff * rt.coeff);
      if (!inserted) it->second += lt.coeff * rt.coeff;
    }
  return out;
}

bool verify_decomposition(int n) {
  TLContext ctx(n);
  for (const IndexSet& i : subsets_of_size(2 * n, n)) {
    const auto product = product_coefficients(i, n);
    const auto b = b_vector(i, ctx);
    for (const PermutationTable& w : all_permutations(n)) {
      Rational lhs(0);
      if (auto it = product.find(w); it != product.end()) lhs = it->second;
      Rational rhs(0);
      const TLElement& image = ctx.sigma(w);
      for (const auto& [tau, btau] : b)
        if (btau != 0) rhs += image.coefficient(tau);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Rational immanant_value(const TLWord& tau, const RationalMatrix& a, TLContext& ctx) {
  const int n = ctx.n();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("immanant_value: matrix must be n x n");
  Rational total(0);
  for (const PermutationTable& w : all_permutations(n)) {
    const Rational f = ctx.sigma(w).coefficient(tau);
    if (f == 0) continue;
    Rational prod(1);
    for (int r = 1; r <= n; ++r) prod *= a.at(r, w[r - 1]);
    total += f * prod;
  }
  return total;
}

std::vector<PermutationTable> all_permutations(int n) {
  PermutationTable base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<PermutationTable> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace tnn
