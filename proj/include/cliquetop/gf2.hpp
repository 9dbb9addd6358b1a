#pragma once

#include <vector>

#include "cliquetop/bitset.hpp"

namespace cliquetop {

// Rank of a GF(2) matrix given as bit-rows, by forward elimination.
// Rows are consumed by value since elimination destroys them.
//
// gf2_rank_serial is the reference implementation; gf2_rank parallelizes
// the row-elimination inner loop with OpenMP when the matrix is large
// enough to pay for it. Both return identical results.
long long gf2_rank_serial(std::vector<Bitset> rows);
long long gf2_rank(std::vector<Bitset> rows);

}  // namespace cliquetop
