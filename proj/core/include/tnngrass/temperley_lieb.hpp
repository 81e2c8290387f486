#pragma once

#include <map>
#include <string>
#include <vector>

#include "tnngrass/matching.hpp"
#include "tnngrass/rational.hpp"
#include "tnngrass/rational_matrix.hpp"

namespace tnn {

/// Basis element of the diagram algebra on generators t_1..t_{n-1} with
/// t_i^2 = 2 t_i, t_i t_j t_i = t_i (|i-j| = 1) and distant commutation, in
/// Jones normal form: a product of descending generator runs with strictly
/// increasing run starts and strictly increasing run ends.
struct TLWord {
  std::vector<std::pair<int, int>> runs;  // (start, end), start >= end

  std::vector<int> letters() const;  // generator indices, expanded
  bool operator==(const TLWord& o) const { return runs == o.runs; }
  bool operator<(const TLWord& o) const { return runs < o.runs; }
  std::string to_string() const;  // "t2 t1" or "1"
};

/// Linear combination of basis words; zero coefficients are never stored.
class TLElement {
 public:
  TLElement() = default;
  static TLElement unit();
  static TLElement generator(int i);

  const std::map<TLWord, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const TLWord& w) const;
  void add(const TLWord& w, const Rational& c);  // drops exact zeros

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  bool operator==(const TLElement& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  std::map<TLWord, Rational> coeffs_;
};

using PermutationTable = std::vector<int>;  // one-line notation, 1-based

/// Per-n tables: the Catalan-many basis words, the bijection between words
/// and their boundary matchings, and a memo of the images of permutations
/// under the map s_i -> t_i - 1.
///
/// Boundary labeling of a diagram on the 2n-cycle: 1..n down the left side,
/// n+1..2n up the right side, so the strand opposite left point i ends at
/// 2n+1-i. The unit diagram is then { {i, 2n+1-i} } and the diagram of t_i
/// pairs {i, i+1} and {2n-i, 2n+1-i}. With this labeling the diagrams are
/// exactly the noncrossing perfect matchings of [2n] in linear order, and the
/// minor-product decomposition over b-vectors comes out coefficient-exact
/// (the convention is pinned by that check).
class TLContext {
 public:
  explicit TLContext(int n);

  int n() const { return n_; }
  const std::vector<TLWord>& basis() const { return basis_; }
  const Matching& diagram(const TLWord& w) const;
  const TLWord& word(const Matching& m) const;

  /// Image of a permutation under the algebra map s_i -> t_i - 1, computed
  /// along a reduced word (the image is reduced-word independent); memoized.
  const TLElement& sigma(const PermutationTable& w);

 private:
  int n_;
  std::vector<TLWord> basis_;
  std::map<TLWord, Matching> word_to_diagram_;
  std::map<Matching, TLWord> diagram_to_word_;
  std::map<PermutationTable, TLElement> sigma_memo_;
};

/// Product in the diagram algebra at loop value 2: diagrams are concatenated,
/// each closed loop contributes a factor 2, and the result is re-expressed
/// over basis words.
TLElement tl_multiply(const TLElement& a, const TLElement& b, TLContext& ctx);

/// Boundary matching of a basis word.
Matching tl_to_matching(const TLWord& tau, TLContext& ctx);

/// Image of a permutation under s_i -> t_i - 1 (see TLContext::sigma).
TLElement sigma_map(const PermutationTable& w, TLContext& ctx);

/// A reduced word for w: letters i1..ik with w = s_{i1} ... s_{ik} under the
/// composition (p*q)(x) = p(q(x)).
std::vector<int> reduced_word(const PermutationTable& w);

/// b_tau = 1 iff every pair of the diagram of tau meets both I and its
/// complement in [2n]. Requires |I| = n, I in [2n].
std::map<TLWord, int> b_vector(const IndexSet& i, TLContext& ctx);

/// Coefficient of x_{1,w(1)} ... x_{n,w(n)} in Delta_I(xbar) Delta_{I^c}(xbar)
/// for every w, where xbar is the embedding of the n x n variable matrix.
/// Every monomial of the product has this form.
std::map<PermutationTable, Rational> product_coefficients(const IndexSet& i, int n);

/// Exhaustive coefficient check of the minor-product decomposition
/// Delta_I Delta_{I^c} = sum_tau b_tau Imm_tau over all n-subsets I of [2n]
/// and all permutations.
bool verify_decomposition(int n);

/// Imm_tau(A) = sum_w f_tau(w) prod_i A_{i,w(i)} with f_tau(w) the
/// coefficient of tau in sigma(w).
Rational immanant_value(const TLWord& tau, const RationalMatrix& a, TLContext& ctx);

/// All permutations of [n] in lexicographic one-line order.
std::vector<PermutationTable> all_permutations(int n);

}  // namespace tnn
