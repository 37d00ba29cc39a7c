#include "rdrd/bounds.hpp"

#include <algorithm>

#include "rdrd/families.hpp"

namespace rdrd {

ParameterSet compute_parameters(const Graph& g, const SolveOptions& opts) {
    ParameterSet p;
    p.rdr = solve(g, Variant::RDRD, opts).value;
    auto rr = solve(g, Variant::RRD, opts);
    p.rr = rr.value;
    p.rr_certificate = rr.certificate;
    p.r = solve(g, Variant::RD, opts).value;
    p.dr = solve(g, Variant::DRD, opts).value;
    p.connected = g.n >= 1 && is_connected(g);
    if (p.connected) p.diam = diameter(g);
    if (g.n <= 16) {
        p.circ = circumference(g);
        p.circ_known = true;
    }
    p.tree = tree_stats(g);
    return p;
}

namespace {

struct Ledger {
    const Graph& g;
    const ParameterSet& p;
    BoundReport report;

    BoundEntry& add(const char* id, const char* description) {
        report.push_back(BoundEntry{id, description});
        return report.back();
    }

    void skip(BoundEntry& e, std::string reason) { e.reason = std::move(reason); }

    // kind: 0 = lhs <= rhs, 1 = lhs >= rhs, 2 = lhs < rhs (strict)
    void fill(BoundEntry& e, long long lhs, long long rhs, int kind) {
        e.applicable = true;
        e.lhs = lhs;
        e.rhs = rhs;
        e.holds = kind == 0 ? lhs <= rhs : kind == 1 ? lhs >= rhs : lhs < rhs;
        e.equality = kind != 2 && lhs == rhs;
    }
};

}  // namespace

BoundReport evaluate_bounds(const Graph& g, const ParameterSet& p) {
    Ledger led{g, p};
    const long long n = g.n, m = g.size();
    const bool tree = p.tree && p.tree->is_tree;

    {
        auto& e = led.add("B1", "rdr <= 2n - 1 for connected n >= 2");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!p.connected || n < 2) led.skip(e, "needs connected graph with n >= 2");
        else {
            led.fill(e, *p.rdr, 2 * n - 1, 0);
            e.characterization_ok = e.equality == (n == 2);
        }
    }
    {
        auto& e = led.add("B2", "rdr <= 2n + 1 - diam for connected n >= 2");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!p.connected || n < 2 || !p.diam) led.skip(e, "needs connected graph with n >= 2");
        else led.fill(e, *p.rdr, 2 * n + 1 - *p.diam, 0);
    }
    {
        auto& e = led.add("B3", "rdr <= 2n + 2 - circumference for connected cyclic graphs");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!p.connected) led.skip(e, "needs connected graph");
        else if (!p.circ_known) led.skip(e, "circumference not computed (size cap)");
        else if (!p.circ) led.skip(e, "acyclic graph, no circumference");
        else led.fill(e, *p.rdr, 2 * n + 2 - *p.circ, 0);
    }
    {
        auto& e = led.add("B4", "rdr <= 2|V1| + 3|V2| of the solved rr certificate");
        if (!p.rdr || !p.rr_certificate) led.skip(e, "rr certificate missing");
        else {
            long long v1 = 0, v2 = 0;
            for (int x : *p.rr_certificate) {
                if (x == 1) ++v1;
                if (x == 2) ++v2;
            }
            led.fill(e, *p.rdr, 2 * v1 + 3 * v2, 0);
        }
    }
    {
        auto& e = led.add("B5", "rdr >= 2n + 1 - ceil((4m - 1)/3) for connected n >= 3");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!p.connected || n < 3) led.skip(e, "needs connected graph with n >= 3");
        else {
            led.fill(e, *p.rdr, 2 * n + 1 - (4 * m - 1 + 2) / 3, 1);
            bool small_star = is_star(g) && n >= 3 && n <= 5;
            bool extremal = recognize_H(g).has_value() || recognize_F(g).has_value() || small_star;
            e.characterization_ok = e.equality == extremal;
        }
    }
    {
        auto& e = led.add("B6", "rdr <= 2n - 3 when a triangle exists");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!has_triangle(g)) led.skip(e, "no triangle");
        else led.fill(e, *p.rdr, 2 * n - 3, 0);
    }
    {
        auto& e = led.add("B7", "rr < rdr");
        if (!p.rdr || !p.rr) led.skip(e, "rr or rdr missing");
        else led.fill(e, *p.rr, *p.rdr, 2);
    }
    {
        auto& e = led.add("B8", "rdr <= 2 rr, equality only on edgeless graphs");
        if (!p.rdr || !p.rr) led.skip(e, "rr or rdr missing");
        else {
            led.fill(e, *p.rdr, 2 * *p.rr, 0);
            e.characterization_ok = e.equality == (m == 0);
        }
    }
    {
        auto& e = led.add("B9", "tree: rdr <= ceil((3n - 1)/2)");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!tree || n < 2) led.skip(e, "needs a tree with n >= 2");
        else led.fill(e, *p.rdr, (3 * n - 1 + 1) / 2, 0);
    }
    {
        auto& e = led.add("B10", "tree: 3 rdr <= 4n + 2s - l");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!tree || n < 3) led.skip(e, "needs a tree with n >= 3");
        else led.fill(e, 3ll * *p.rdr, 4 * n + 2 * p.tree->supports - p.tree->leaves, 0);
    }
    {
        auto& e = led.add("B11", "tree: r + 1 <= rdr <= 3r, lower equality only on stars");
        if (!p.rdr || !p.r) led.skip(e, "r or rdr missing");
        else if (!tree) led.skip(e, "needs a tree");
        else {
            // lhs/rhs show the upper half; equality reports the lower half.
            e.applicable = true;
            e.lhs = *p.rdr;
            e.rhs = 3ll * *p.r;
            e.holds = *p.r + 1 <= *p.rdr && *p.rdr <= 3 * *p.r;
            e.equality = *p.rdr == *p.r + 1;
            e.characterization_ok = e.equality == is_star(g);
        }
    }
    {
        auto& e = led.add("B12", "rdr <= 4m - 2n + 3 for connected n >= 2");
        if (!p.rdr) led.skip(e, "rdr missing");
        else if (!p.connected || n < 2) led.skip(e, "needs connected graph with n >= 2");
        else {
            led.fill(e, *p.rdr, 4 * m - 2 * n + 3, 0);
            e.characterization_ok = e.equality == (tree && *p.rdr == 2 * n - 1);
        }
    }
    return led.report;
}

std::optional<bool> check_lemma_nonpendant(const Graph& g) {
    if (g.n > 12) return std::nullopt;
    bool has_nonpendant = false;
    for (auto [u, v] : g.edges)
        if (g.degree(u) >= 2 && g.degree(v) >= 2) has_nonpendant = true;
    if (!has_nonpendant) return std::nullopt;
    return any_optimum_satisfies(g, Variant::RDRD, [](const Labeling& l) {
        return std::any_of(l.begin(), l.end(), [](int x) { return x <= 1; });
    });
}

EqualityStructureReport check_equality_structures(const Graph& g, const ParameterSet& p) {
    EqualityStructureReport rep;
    if (!p.rdr || !p.rr || *p.rdr != 2 * *p.rr - 1) {
        rep.detail = "numeric equality rdr == 2 rr - 1 does not hold";
        return rep;
    }
    rep.applicable = true;

    if (g.size() == 1) {
        rep.matches = true;
        rep.branch = 1;
        rep.detail = "a single edge plus isolated vertices";
        return rep;
    }

    for (int h = 0; h < g.n; ++h) {
        const auto& nbh = g.adj[h];
        if (nbh.empty()) continue;
        std::vector<char> in_h(g.n, 0);
        for (int u : nbh) in_h[u] = 1;
        bool ok = true;
        // N(h) induces no isolated vertex.
        for (int u : nbh) {
            bool inner = false;
            for (int w : g.adj[u]) inner = inner || in_h[w];
            if (!inner) { ok = false; break; }
        }
        if (!ok) continue;
        // R = V minus N[h] must be edgeless (h-R edges are impossible by
        // construction, so only R-internal edges can fail).
        std::vector<int> remote;
        for (int v = 0; v < g.n; ++v)
            if (v != h && !in_h[v]) remote.push_back(v);
        for (int u : remote) {
            for (int w : g.adj[u])
                if (w != h && !in_h[w]) { ok = false; break; }
            if (!ok) break;
        }
        if (!ok) continue;
        // Some neighbor of h must have no neighbor in R.
        bool witness = false;
        std::vector<char> in_r(g.n, 0);
        for (int u : remote) in_r[u] = 1;
        for (int u : nbh) {
            bool touches_r = false;
            for (int w : g.adj[u]) touches_r = touches_r || in_r[w];
            if (!touches_r) { witness = true; break; }
        }
        if (!witness) continue;
        rep.matches = true;
        rep.branch = 2;
        rep.detail = "hub vertex " + std::to_string(h);
        return rep;
    }
    rep.detail = "no admissible structure found";
    return rep;
}

}  // namespace rdrd
