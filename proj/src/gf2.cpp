#include "cliquetop/gf2.hpp"

#include <cstddef>

namespace cliquetop {

long long gf2_rank_serial(std::vector<Bitset> rows) {
    long long rank = 0;
    const long long m = static_cast<long long>(rows.size());
    for (long long i = 0; i < m; ++i) {
        int pivot = rows[i].first();
        if (pivot == -1) continue;
        ++rank;
        for (long long j = i + 1; j < m; ++j)
            if (rows[j].test(pivot)) rows[j] ^= rows[i];
    }
    return rank;
}

long long gf2_rank(std::vector<Bitset> rows) {
    long long rank = 0;
    const long long m = static_cast<long long>(rows.size());
    for (long long i = 0; i < m; ++i) {
        int pivot = rows[i].first();
        if (pivot == -1) continue;
        ++rank;
        const Bitset& pivot_row = rows[i];
#ifdef _OPENMP
        // Row updates below the pivot are independent; fan them out when the
        // remaining block is big enough to amortize the fork.
        if (m - i > 512 && pivot_row.words().size() > 4) {
#pragma omp parallel for schedule(static)
            for (long long j = i + 1; j < m; ++j)
                if (rows[j].test(pivot)) rows[j] ^= pivot_row;
            continue;
        }
#endif
        for (long long j = i + 1; j < m; ++j)
            if (rows[j].test(pivot)) rows[j] ^= pivot_row;
    }
    return rank;
}

}  // namespace cliquetop
