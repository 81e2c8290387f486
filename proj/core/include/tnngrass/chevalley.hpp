#pragma once

#include <vector>

#include "tnngrass/quad_expression.hpp"

namespace tnn {

/// (I \ {u}) u {v} when u is in I and v is not; I unchanged otherwise.
/// Throws unless |u - v| == 1.
IndexSet shift_index_set(const IndexSet& s, int u, int v);

/// The elementary index move on a whole expression: per term, count in how
/// many of its two index sets u can move to v; keep exactly the terms
/// attaining the maximal count and perform the move in both sets of every
/// kept term. A maximal count of zero leaves the expression unchanged.
/// Throws unless |u - v| == 1 and u, v lie inside the ambient range.
QuadExpression chevalley_apply(const QuadExpression& e, int u, int v);

/// The equivalent expression over Gr(eta, 2*eta): drops the common
/// intersection and relabels the common symmetric difference onto [2*eta]
/// through the order preserving map. eta == 0 yields the scalar (0,0)
/// expression whose terms carry only coefficients.
QuadExpression simplify(const QuadExpression& e);

/// The composite move along a pair u, v consecutive in the common symmetric
/// difference D: a chain of elementary moves walking u to v, interleaved so
/// that common-intersection indices lying strictly between u and v are first
/// walked out of the way. Requires u != v, both in D and consecutive in D.
QuadExpression composite_chevalley(const QuadExpression& e, int u, int v);

/// Index sets containing exactly one of {k, 2n+1-k} for every k in [n]; the
/// coordinates carried by principal minors under the standard embedding.
std::vector<IndexSet> principal_index_sets(int n);
bool is_principal_index_set(const IndexSet& s, int n);

/// True when every I_a and J_a is principal. Requires a Gr(n, 2n) context.
bool is_principal(const QuadExpression& e);

}  // namespace tnn
