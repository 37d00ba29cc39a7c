#ifndef RDRD_REDUCTION_HPP
#define RDRD_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdrd/labeling.hpp"
#include "rdrd/solver.hpp"

namespace rdrd {

enum class HostRole { XCycle, Hub, Source, EdgeGadget };

struct HostVertex {
    HostRole role;
    int index = -1;  // position in the x-cycle / source id / position in gadget cycle
    int edge = -1;   // source edge id for gadget vertices
};

// Host graph for the vertex-cover transformation. Vertex numbering: the
// m-cycle x_0..x_{m-1} first, then the hub y, then the source vertices in
// their original order, then one m-cycle gadget per source edge in edge
// order. m = 3|V(source)| + 4.
struct ReductionInstance {
    Graph source;
    int m_param = 0;
    Graph host;
    std::vector<HostVertex> roles;  // indexed by host vertex id

    int hub() const { return m_param; }
    int host_id_of_source(int v) const { return m_param + 1 + v; }
};

ReductionInstance build_reduction(const Graph& g);

// All structural invariants of the host: size formula, block cycles, hub
// adjacency, gadget adjacency. Throws with a message on the first failure.
void verify_structure(const ReductionInstance& inst);

// 3 on cover vertices and the hub, 0 elsewhere; weight 3|cover| + 3.
// Throws if `cover` misses an edge of the source.
Labeling cover_to_labeling(const ReductionInstance& inst, const std::vector<int>& cover);

// Source vertices labeled 3. When k is given and weight(l) <= 3k + 3, the
// result is checked to be a cover of size <= k; a failure there contradicts
// the transformation's guarantee and throws.
std::vector<int> labeling_to_cover(const ReductionInstance& inst, const Labeling& l,
                                   std::optional<int> k = std::nullopt);

// (min cover of g <= k)  ==  (optimum of the host <= 3k + 3), decided by
// exact solves. The host solve is seeded with the labeling built from a
// minimum cover whenever that labeling is valid. When opts carries no node
// budget, a large default is used (hosts exceed the solver's free-size cap);
// BudgetExhausted propagates if even that runs out.
bool verify_equivalence(const Graph& g, int k, const SolveOptions& opts = {});

}  // namespace rdrd

#endif
