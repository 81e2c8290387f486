#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tnngrass/quad_expression.hpp"
#include "tnngrass/test_point.hpp"

namespace tnn {

/// Delta_min(I,J) * Delta_max(I,J) - Delta_I * Delta_J in ">= 0" form.
/// Collapses to the zero (empty) expression when {min,max} = {I,J}.
QuadExpression logsupmod_expression(const IndexSet& i, const IndexSet& j,
                                    const GrassmannContext& ctx);

/// Row/column sets of a minor of an n x m matrix to the index set of the
/// corresponding maximal minor of the embedding:
/// I = P u { m+n+1-j : j in [m] \ Q }. Requires P in [n], Q in [m], |P| = |Q|.
IndexSet minor_to_plucker(const IndexSet& p, const IndexSet& q, int m, int n);

/// det A_{min(P,R),min(Q,S)} det A_{max(P,R),max(Q,S)} - det A_{P,Q} det A_{R,S}
/// in ">= 0" form over Gr(n,2n), written in embedded coordinates. Collapses to
/// the zero expression when the min/max pair reproduces the inputs.
QuadExpression lpp_expression(const IndexSet& p, const IndexSet& q, const IndexSet& r,
                              const IndexSet& s, int n);

/// The k-slice of the principal coordinate family:
/// { P u ([n+1,2n] \ (2n+1-P)) : P in [n], |P| = k }, P in lexicographic order.
std::vector<IndexSet> bj_index_family(int n, int k);

/// binom(n,k+1)^{-1} sum_{I in family(k+1)} Delta_I Delta_{I^c}
///   - binom(n,k)^{-1} sum_{I in family(k)} Delta_I Delta_{I^c}
/// over Gr(n,2n); the subtracted k-slice terms come first. Requires n >= 2 and
/// 0 <= k <= floor(n/2) - 1.
QuadExpression bj_expression(int n, int k);

struct LatticeClosureResult {
  bool closed = true;
  /// A pair whose entrywise min or max is missing, with the missing set.
  std::optional<std::pair<IndexSet, IndexSet>> witness;
  std::optional<IndexSet> missing;
};

/// Closure of a same-size family under entrywise (min, max).
LatticeClosureResult check_lattice_closure(const std::vector<IndexSet>& sets);

/// { I : Delta_I(point) != 0 } over all m-subsets of [m+n].
std::vector<IndexSet> positroid(PluckerCache& cache, const GrassmannContext& ctx);

}  // namespace tnn
