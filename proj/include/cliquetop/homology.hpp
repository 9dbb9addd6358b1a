#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// Clique (flag) complex simplices grouped by dimension; by_dim[d] holds the
// d-simplices (complete vertex sets of size d+1) in lexicographic order.
struct SimplicialComplex {
    std::vector<std::vector<VertexSet>> by_dim;

    long long simplex_count() const;
    int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
};

inline constexpr long long kDefaultSimplexBudget = 2'000'000;

// kDefaultSimplexBudget, or the value of the CLIQUE_SIMPLEX_BUDGET
// environment variable when set (read once; must be a positive integer).
long long default_simplex_budget();

// Hard cap on the dense bit-matrix size any single boundary-rank
// elimination may allocate (bits). Exceeding it raises budget_error rather
// than thrashing memory.
inline constexpr long long kDenseBitBudget = 2'000'000'000;

// Enumerates every complete subgraph of g. Throws budget_error when the
// simplex count would exceed budget. max_dim, when given, asserts the
// complex has no higher-dimensional simplex; finding one is rejected with
// invalid_argument (a truncated complex would have wrong homology).
SimplicialComplex clique_complex(const Graph& g, long long budget = default_simplex_budget(),
                                 std::optional<int> max_dim = std::nullopt);

long long euler_characteristic(const SimplicialComplex& complex);

// Betti numbers over GF(2): b_d = f_d - rank d_d - rank d_{d+1}, where d_d
// is the dimension-d boundary matrix. Cross-checks the alternating sum
// against the Euler characteristic and throws invariant_violation on a
// mismatch. The returned vector has exactly dimension()+1 entries.
std::vector<long long> betti_gf2(const SimplicialComplex& complex);

// Euler characteristic plus the Betti vector with trailing zeros trimmed
// (b_0 is always kept for a nonempty complex).
struct HomotopySignature {
    long long euler = 0;
    std::vector<long long> betti;

    bool operator==(const HomotopySignature&) const = default;
};

HomotopySignature homotopy_signature(const Graph& g,
                                     long long budget = default_simplex_budget());

// "chi=<euler> betti=<b0>,<b1>,..."
std::string format_signature(const HomotopySignature& sig);

// True when the signature is that of a wedge of `count` circles (a single
// point for count == 0): betti (1, count), chi 1 - count.
bool is_wedge_of_circles(const HomotopySignature& sig, long long count);

}  // namespace cliquetop
