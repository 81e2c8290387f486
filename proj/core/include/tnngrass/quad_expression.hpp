#pragma once

#include <string>
#include <vector>

#include "tnngrass/index_set.hpp"
#include "tnngrass/rational.hpp"

namespace tnn {

/// Which Grassmannian an expression lives on: Gr(m, m+n) with 1 <= m <= n.
/// The degenerate (0,0) context carries scalar expressions whose index sets
/// are all empty (the terminal case of the simplification chain).
struct GrassmannContext {
  int m = 0;
  int n = 0;

  GrassmannContext() = default;
  GrassmannContext(int m_, int n_);

  int ambient() const { return m + n; }
  bool operator==(const GrassmannContext& o) const { return m == o.m && n == o.n; }
  bool operator!=(const GrassmannContext& o) const { return !(*this == o); }
};

/// One summand c * Delta_I * Delta_J.
struct QuadTerm {
  Rational coeff;
  IndexSet I;
  IndexSet J;

  bool operator==(const QuadTerm& o) const {
    return coeff == o.coeff && I == o.I && J == o.J;
  }
};

/// A homogeneous expression sum_a c_a Delta_{I_a} Delta_{J_a}: every term has
/// |I| = |J| = m, indices inside [m+n], and the multiset union I (+) J is the
/// same for all terms. Construction validates and caches the common
/// intersection C, the common symmetric difference D and eta = |D| / 2.
/// Terms stay in the order given; equal (I, J) pairs are not merged.
class QuadExpression {
 public:
  QuadExpression(GrassmannContext ctx, std::vector<QuadTerm> terms);

  const GrassmannContext& context() const { return ctx_; }
  const std::vector<QuadTerm>& terms() const { return terms_; }

  /// Indices lying in every I_a and every J_a (multiplicity 2 everywhere).
  const IndexSet& common_intersection() const { return common_; }
  /// Indices lying in exactly one of I_a, J_a for every term.
  const IndexSet& symmetric_difference() const { return sym_diff_; }
  int eta() const { return sym_diff_.size() / 2; }

  bool operator==(const QuadExpression& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }
  bool operator!=(const QuadExpression& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  GrassmannContext ctx_;
  std::vector<QuadTerm> terms_;
  IndexSet common_;
  IndexSet sym_diff_;
};

/// Sums coefficients of terms with identical ordered (I, J); first
/// occurrence keeps its position. Exact zero sums are kept.
QuadExpression merge_duplicate_terms(const QuadExpression& e);

/// Multiplies every coefficient by k.
QuadExpression scale_expression(const QuadExpression& e, const Rational& k);

}  // namespace tnn
