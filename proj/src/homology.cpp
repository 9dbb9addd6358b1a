#include "cliquetop/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "cliquetop/errors.hpp"
#include "cliquetop/gf2.hpp"

namespace cliquetop {

long long default_simplex_budget() {
    static const long long value = [] {
        const char* env = std::getenv("CLIQUE_SIMPLEX_BUDGET");
        if (!env || !*env) return kDefaultSimplexBudget;
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw std::invalid_argument(
                "CLIQUE_SIMPLEX_BUDGET must be a positive integer");
        return v;
    }();
    return value;
}

long long SimplicialComplex::simplex_count() const {
    long long total = 0;
    for (const auto& level : by_dim) total += static_cast<long long>(level.size());
    return total;
}

namespace {

struct ComplexBuilder {
    const Graph& g;
    long long budget;
    std::optional<int> max_dim;
    SimplicialComplex complex{};
    long long count = 0;

    void emit(const VertexSet& simplex, int size) {
        if (max_dim && size > *max_dim + 1)
            throw std::invalid_argument(
                "max_dim is below the dimension of the clique complex");
        if (++count > budget)
            throw budget_error("clique complex exceeds the simplex budget of " +
                               std::to_string(budget));
        if (static_cast<int>(complex.by_dim.size()) < size) complex.by_dim.resize(size);
        complex.by_dim[size - 1].push_back(simplex);
    }

    // Extends the complete set `cur` by vertices from `cand` (all adjacent to
    // every member of cur and larger than its max). Ascending branch order
    // makes each by_dim level come out lexicographically sorted.
    void grow(VertexSet cur, int size, const VertexSet& cand) {
        for (int v : cand.members()) {
            VertexSet next = cur;
            next.set(v);
            emit(next, size + 1);
            VertexSet next_cand = cand;
            next_cand &= g.neighbors(v);
            // keep only vertices above v
            for (int u = next_cand.first(); u != -1 && u < v; u = next_cand.next(u))
                next_cand.reset(u);
            grow(next, size + 1, next_cand);
        }
    }

    void run() {
        int n = g.vertex_count();
        grow(VertexSet(n), 0, VertexSet(n).flipped());
    }
};

// Rank of the boundary map from dimension d to d-1, via bit-rows: row i
// lists the facets of the i-th d-simplex as indices into by_dim[d-1].
long long boundary_rank(const SimplicialComplex& complex, int d) {
    if (d <= 0 || d > complex.dimension()) return 0;
    const auto& faces = complex.by_dim[d - 1];
    const auto& cells = complex.by_dim[d];
    long long bits = static_cast<long long>(cells.size()) * static_cast<long long>(faces.size());
    if (bits > kDenseBitBudget)
        throw budget_error("boundary matrix too large for dense elimination (" +
                           std::to_string(bits) + " bits)");

    std::vector<Bitset> rows;
    rows.reserve(cells.size());
    int universe = static_cast<int>(faces.size());
    for (const VertexSet& s : cells) {
        Bitset row(universe);
        for (int v : s.members()) {
            VertexSet facet = s;
            facet.reset(v);
            auto it = std::lower_bound(faces.begin(), faces.end(), facet, Bitset::lex_less);
            if (it == faces.end() || !(*it == facet))
                throw invariant_violation("complex is not closed under taking faces");
            row.set(static_cast<int>(it - faces.begin()));
        }
        rows.push_back(std::move(row));
    }
    return gf2_rank(std::move(rows));
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g, long long budget,
                                 std::optional<int> max_dim) {
    if (budget <= 0) throw std::invalid_argument("simplex budget must be positive");
    if (max_dim && *max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
    ComplexBuilder builder{g, budget, max_dim};
    builder.run();
    return std::move(builder.complex);
}

long long euler_characteristic(const SimplicialComplex& complex) {
    long long chi = 0;
    for (int d = 0; d <= complex.dimension(); ++d) {
        long long f = static_cast<long long>(complex.by_dim[d].size());
        chi += (d % 2 == 0) ? f : -f;
    }
    return chi;
}

std::vector<long long> betti_gf2(const SimplicialComplex& complex) {
    int dim = complex.dimension();
    if (dim < 0) return {};
    std::vector<long long> ranks(dim + 2, 0);
    for (int d = 1; d <= dim; ++d) ranks[d] = boundary_rank(complex, d);

    std::vector<long long> betti(dim + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        long long f = static_cast<long long>(complex.by_dim[d].size());
        betti[d] = f - ranks[d] - ranks[d + 1];
        if (betti[d] < 0) throw invariant_violation("negative Betti number computed");
    }

    long long alt = 0;
    for (int d = 0; d <= dim; ++d) alt += (d % 2 == 0) ? betti[d] : -betti[d];
    if (alt != euler_characteristic(complex))
        throw invariant_violation("Betti alternating sum disagrees with Euler characteristic");
    return betti;
}

HomotopySignature homotopy_signature(const Graph& g, long long budget) {
    SimplicialComplex complex = clique_complex(g, budget);
    HomotopySignature sig;
    sig.euler = euler_characteristic(complex);
    sig.betti = betti_gf2(complex);
    while (sig.betti.size() > 1 && sig.betti.back() == 0) sig.betti.pop_back();
    return sig;
}

std::string format_signature(const HomotopySignature& sig) {
    std::string out = "chi=" + std::to_string(sig.euler) + " betti=";
    for (std::size_t i = 0; i < sig.betti.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sig.betti[i]);
    }
    return out;
}

bool is_wedge_of_circles(const HomotopySignature& sig, long long count) {
    if (sig.euler != 1 - count) return false;
    if (count == 0) return sig.betti == std::vector<long long>{1};
    return sig.betti == std::vector<long long>{1, count};
}

}  // namespace cliquetop
