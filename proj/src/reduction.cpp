#include "rdrd/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdrd {

ReductionInstance build_reduction(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("source graph must have n >= 1");
    ReductionInstance inst;
    inst.source = g;
    const int m = 3 * g.n + 4;
    inst.m_param = m;
    const int n_host = m + 1 + g.n + m * g.size();
    std::vector<std::pair<int, int>> edges;
    auto cycle = [&](int base) {
        for (int i = 0; i < m; ++i) {
            int a = base + i, b = base + (i + 1) % m;
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    };

    inst.roles.resize(n_host);
    for (int i = 0; i < m; ++i) inst.roles[i] = {HostRole::XCycle, i, -1};
    const int y = m;
    inst.roles[y] = {HostRole::Hub, -1, -1};
    for (int v = 0; v < g.n; ++v) inst.roles[m + 1 + v] = {HostRole::Source, v, -1};

    cycle(0);
    for (int i = 0; i < m; ++i) edges.emplace_back(i, y);
    for (int v = 0; v < g.n; ++v) edges.emplace_back(y, m + 1 + v);
    for (int j = 0; j < g.size(); ++j) {
        int base = m + 1 + g.n + j * m;
        auto [a, b] = g.edges[j];
        for (int i = 0; i < m; ++i) {
            inst.roles[base + i] = {HostRole::EdgeGadget, i, j};
            edges.emplace_back(m + 1 + a, base + i);
            edges.emplace_back(m + 1 + b, base + i);
        }
        cycle(base);
    }
    inst.host = new_graph(n_host, std::move(edges));
    return inst;
}

void verify_structure(const ReductionInstance& inst) {
    const Graph& h = inst.host;
    const Graph& g = inst.source;
    const int m = inst.m_param;
    auto fail = [](const std::string& msg) { throw std::runtime_error("host structure: " + msg); };
    if (m != 3 * g.n + 4) fail("wrong m parameter");
    if (h.n != m + 1 + g.n + m * g.size()) fail("wrong host order");
    auto expect_cycle = [&](int base) {
        for (int i = 0; i < m; ++i)
            if (!h.has_edge(base + i, base + (i + 1) % m)) fail("broken block cycle");
    };
    expect_cycle(0);
    int y = inst.hub();
    for (int i = 0; i < m; ++i)
        if (!h.has_edge(i, y)) fail("hub not adjacent to the x-cycle");
    for (int v = 0; v < g.n; ++v)
        if (!h.has_edge(y, inst.host_id_of_source(v))) fail("hub not adjacent to a source vertex");
    if (h.degree(y) != m + g.n) fail("wrong hub degree");
    for (int j = 0; j < g.size(); ++j) {
        int base = m + 1 + g.n + j * m;
        expect_cycle(base);
        auto [a, b] = g.edges[j];
        for (int i = 0; i < m; ++i) {
            if (!h.has_edge(base + i, inst.host_id_of_source(a)) ||
                !h.has_edge(base + i, inst.host_id_of_source(b)))
                fail("gadget vertex not adjacent to its edge endpoints");
            if (h.degree(base + i) != 4) fail("wrong gadget vertex degree");
        }
    }
    for (int i = 0; i < m; ++i)
        if (h.degree(i) != 3) fail("wrong x-cycle vertex degree");
}

Labeling cover_to_labeling(const ReductionInstance& inst, const std::vector<int>& cover) {
    std::vector<char> in_cover(inst.source.n, 0);
    for (int v : cover) {
        if (v < 0 || v >= inst.source.n)
            throw std::invalid_argument("cover vertex out of range: " + std::to_string(v));
        in_cover[v] = 1;
    }
    for (auto [a, b] : inst.source.edges)
        if (!in_cover[a] && !in_cover[b])
            throw std::invalid_argument("set does not cover edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
    Labeling l(inst.host.n, 0);
    l[inst.hub()] = 3;
    for (int v = 0; v < inst.source.n; ++v)
        if (in_cover[v]) l[inst.host_id_of_source(v)] = 3;
    return l;
}

std::vector<int> labeling_to_cover(const ReductionInstance& inst, const Labeling& l,
                                   std::optional<int> k) {
    auto rep = is_valid(inst.host, l, Variant::RDRD);
    if (!rep.valid) throw std::invalid_argument("labeling is not valid on the host");
    std::vector<int> cover;
    for (int v = 0; v < inst.source.n; ++v)
        if (l[inst.host_id_of_source(v)] == 3) cover.push_back(v);
    if (k && weight(l) <= 3 * *k + 3) {
        std::vector<char> in_cover(inst.source.n, 0);
        for (int v : cover) in_cover[v] = 1;
        for (auto [a, b] : inst.source.edges)
            if (!in_cover[a] && !in_cover[b])
                throw std::runtime_error(
                    "extracted set misses edge (" + std::to_string(a) + "," +
                    std::to_string(b) + ") despite weight <= 3k + 3");
        if (static_cast<int>(cover.size()) > *k)
            throw std::runtime_error("extracted cover larger than k despite weight <= 3k + 3");
    }
    return cover;
}

bool verify_equivalence(const Graph& g, int k, const SolveOptions& opts) {
    ReductionInstance inst = build_reduction(g);
    VertexCover vc = min_vertex_cover(g, opts);
    SolveOptions host_opts = opts;
    // Hosts routinely exceed the solver's free-size cap, and the seeded
    // search prunes well; supply a roomy budget when the caller gave none.
    if (!host_opts.node_budget) host_opts.node_budget = 500'000'000;
    Labeling seed = cover_to_labeling(inst, vc.cover);
    if (is_valid(inst.host, seed, Variant::RDRD).valid) host_opts.seed = std::move(seed);
    SolveResult host = solve(inst.host, Variant::RDRD, host_opts);
    return (vc.size <= k) == (host.value <= 3 * k + 3);
}

}  // namespace rdrd
