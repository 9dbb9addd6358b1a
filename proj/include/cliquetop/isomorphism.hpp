#pragma once

#include "cliquetop/graph.hpp"

namespace cliquetop {

// Exact isomorphism by backtracking is guarded to this many vertices;
// larger inputs throw size_limit_error and callers fall back to
// invariant comparison.
inline constexpr int kExactIsoLimit = 12;

bool is_isomorphic(const Graph& a, const Graph& b);

// Cheap isomorphism-invariant comparison: order, size, degree multiset,
// octahedron recognition. Agreement does not certify isomorphism.
bool same_invariants(const Graph& a, const Graph& b);

}  // namespace cliquetop
