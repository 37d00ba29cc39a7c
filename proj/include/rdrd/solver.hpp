#ifndef RDRD_SOLVER_HPP
#define RDRD_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "rdrd/labeling.hpp"

namespace rdrd {

struct SolveOptions {
    bool enumerate_all = false;          // also count all optima (n <= 12)
    std::optional<long long> node_budget;
    std::optional<int> initial_upper_bound;  // trusted attainable weight
    std::optional<Labeling> seed;            // feasible incumbent labeling
};

struct SolveResult {
    int value = 0;
    Labeling certificate;                // lexicographically smallest optimum
    std::optional<long long> optima_count;
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
    bool optimal = true;
};

// Thrown when the node budget runs out; carries the best incumbent found.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(SolveResult inc)
        : std::runtime_error("node budget exhausted"), incumbent(std::move(inc)) {}
    SolveResult incumbent;  // optimal == false
};

// Exact minimum-weight labeling for the requested variant. Deterministic:
// the certificate is the lexicographically smallest optimum under vertex
// order 0..n-1 and label order 0 < 1 < 2 < 3. Inputs with n > 24 require an
// explicit node budget.
SolveResult solve(const Graph& g, Variant v, const SolveOptions& opts = {});

struct OptimaSet {
    int value = 0;
    std::vector<Labeling> optima;  // lexicographically sorted
    bool truncated = false;
};

// All optimal labelings, up to cap. Requires n <= 12.
OptimaSet enumerate_optima(const Graph& g, Variant v, long long cap);

// Early-exit scan of the optimal set; true iff some optimum satisfies pred.
bool any_optimum_satisfies(const Graph& g, Variant v,
                           const std::function<bool(const Labeling&)>& pred);

struct VertexCover {
    int size = 0;
    std::vector<int> cover;  // sorted; lexicographically smallest optimum
};

VertexCover min_vertex_cover(const Graph& g, const SolveOptions& opts = {});

}  // namespace rdrd

#endif
