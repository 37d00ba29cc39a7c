#include "rdrd/solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>

namespace rdrd {

namespace {

constexpr int kDefaultSizeCap = 24;
constexpr int kHardSizeCap = 64;

struct Search {
    const Graph& g;
    Variant var;
    int n;
    int dmax;
    std::vector<std::uint64_t> closed_mask;   // self | neighbors
    std::vector<std::vector<int>> closed_list;
    std::vector<int> order;
    std::vector<int> value;
    std::uint64_t assigned = 0;
    long long nodes = 0;
    long long budget = LLONG_MAX;
    bool exhausted = false;
    int ub;                 // weight known (or trusted) to be attainable
    Labeling best;          // best complete labeling found by the search
    bool have_best = false;

    Search(const Graph& graph, Variant variant, int upper_bound)
        : g(graph), var(variant), n(graph.n), dmax(max_label(variant)),
          closed_mask(n), closed_list(n), value(n, -1), ub(upper_bound) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t m = 1ull << v;
            closed_list[v].push_back(v);
            for (int w : g.adj[v]) {
                m |= 1ull << w;
                closed_list[v].push_back(w);
            }
            closed_mask[v] = m;
        }
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
    }

    // Rule check for a vertex whose closed neighborhood is fully assigned.
    bool rule_ok(int u) const {
        int lu = value[u];
        if (lu >= 2) return true;
        int zeros = 0, ones = 0, twos = 0, threes = 0;
        for (int w : g.adj[u]) {
            switch (value[w]) {
                case 0: ++zeros; break;
                case 1: ++ones; break;
                case 2: ++twos; break;
                default: ++threes; break;
            }
        }
        switch (var) {
            case Variant::RD:
                return lu != 0 || (ones >= 1 && zeros >= 1);
            case Variant::RRD:
                return lu != 0 || (twos >= 1 && zeros >= 1);
            case Variant::DRD:
                if (lu == 0) return threes >= 1 || twos >= 2;
                return twos + threes >= 1;
            case Variant::RDRD:
                if (lu == 0) return (threes >= 1 || twos >= 2) && zeros >= 1;
                return twos + threes >= 1;
        }
        return false;
    }

    // After assigning v, every vertex in its closed neighborhood that became
    // fully decided must satisfy its rule.
    bool assign_ok(int v) const {
        for (int u : closed_list[v]) {
            if (!((assigned >> u) & 1)) continue;
            if ((closed_mask[u] & ~assigned) != 0) continue;
            if (!rule_ok(u)) return false;
        }
        return true;
    }

    // Phase 1: find any labeling strictly lighter than ub, repeatedly.
    void improve(int k, int w) {
        if (k == n) {
            ub = w;
            best = value;
            have_best = true;
            return;
        }
        int v = order[k];
        for (int val = 0; val <= dmax; ++val) {
            if (w + val >= ub) break;
            if (++nodes > budget) { exhausted = true; break; }
            value[v] = val;
            assigned |= 1ull << v;
            if (assign_ok(v)) improve(k + 1, w + val);
            assigned &= ~(1ull << v);
            if (exhausted) break;
        }
        value[v] = -1;
    }

    // Phase 2: first labeling of weight <= bound in id order with label order
    // 0 < 1 < 2 < 3 -- the lexicographically smallest optimum.
    bool certificate(int k, int w, int bound) {
        if (k == n) {
            best = value;
            have_best = true;
            return true;
        }
        for (int val = 0; val <= dmax; ++val) {
            if (w + val > bound) break;
            if (++nodes > budget) { exhausted = true; return false; }
            value[k] = val;
            assigned |= 1ull << k;
            if (assign_ok(k) && certificate(k + 1, w + val, bound)) return true;
            assigned &= ~(1ull << k);
            if (exhausted) return false;
        }
        value[k] = -1;
        return false;
    }

    // Visits every valid labeling of weight <= bound in lexicographic order;
    // stop when fn returns false.
    bool each_optimum(int k, int w, int bound, const std::function<bool(const Labeling&)>& fn) {
        if (k == n) return fn(value);
        for (int val = 0; val <= dmax; ++val) {
            if (w + val > bound) break;
            if (++nodes > budget) { exhausted = true; return false; }
            value[k] = val;
            assigned |= 1ull << k;
            bool go_on = !assign_ok(k) || each_optimum(k + 1, w + val, bound, fn);
            assigned &= ~(1ull << k);
            if (!go_on || exhausted) { value[k] = -1; return go_on; }
        }
        value[k] = -1;
        return true;
    }

    void reset() {
        std::fill(value.begin(), value.end(), -1);
        assigned = 0;
    }
};

Labeling default_incumbent(int n, Variant v) {
    int fill = (v == Variant::DRD || v == Variant::RDRD) ? 2 : 1;
    return Labeling(n, fill);
}

}  // namespace

SolveResult solve(const Graph& g, Variant v, const SolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (g.n < 1) throw std::invalid_argument("solve requires n >= 1");
    if (g.n > kHardSizeCap) throw std::invalid_argument("instance too large (n > 64)");
    if (g.n > kDefaultSizeCap && !opts.node_budget)
        throw std::invalid_argument(
            "instance too large for default budget (n > 24); set an explicit node budget");

    Labeling incumbent = default_incumbent(g.n, v);
    int incumbent_weight = weight(incumbent);
    if (opts.seed) {
        auto rep = is_valid(g, *opts.seed, v);
        if (!rep.valid) throw std::invalid_argument("seed labeling is not valid");
        if (weight(*opts.seed) < incumbent_weight) {
            incumbent = *opts.seed;
            incumbent_weight = weight(incumbent);
        }
    }
    int ub = incumbent_weight;
    if (opts.initial_upper_bound) ub = std::min(ub, *opts.initial_upper_bound);

    Search s(g, v, ub);
    if (opts.node_budget) s.budget = *opts.node_budget;

    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    auto bail = [&]() -> BudgetExhausted {
        SolveResult inc;
        if (s.have_best && weight(s.best) <= incumbent_weight) {
            inc.certificate = s.best;
        } else {
            inc.certificate = incumbent;
        }
        inc.value = weight(inc.certificate);
        inc.nodes_explored = s.nodes;
        inc.wall_seconds = elapsed();
        inc.optimal = false;
        return BudgetExhausted(std::move(inc));
    };

    s.improve(0, 0);
    if (s.exhausted) throw bail();
    const int opt = s.ub;

    s.reset();
    s.have_best = false;
    if (!s.certificate(0, 0, opt)) {
        if (s.exhausted) throw bail();
        throw std::logic_error("no labeling attains the given upper bound");
    }

    SolveResult res;
    res.value = opt;
    res.certificate = s.best;
    auto rep = is_valid(g, res.certificate, v);
    if (!rep.valid || weight(res.certificate) != opt)
        throw std::logic_error("certificate self-check failed");

    if (opts.enumerate_all) {
        if (g.n > 12)
            throw std::invalid_argument("optima enumeration requires n <= 12");
        long long count = 0;
        s.reset();
        s.each_optimum(0, 0, opt, [&](const Labeling&) {
            ++count;
            return true;
        });
        if (s.exhausted) throw bail();
        res.optima_count = count;
    }

    res.nodes_explored = s.nodes;
    res.wall_seconds = elapsed();
    return res;
}

OptimaSet enumerate_optima(const Graph& g, Variant v, long long cap) {
    if (g.n > 12) throw std::invalid_argument("optima enumeration requires n <= 12");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    SolveResult base = solve(g, v);
    OptimaSet out;
    out.value = base.value;
    Search s(g, v, base.value);
    s.each_optimum(0, 0, base.value, [&](const Labeling& l) {
        if (static_cast<long long>(out.optima.size()) == cap) {
            out.truncated = true;
            return false;
        }
        out.optima.push_back(l);
        return true;
    });
    return out;
}

bool any_optimum_satisfies(const Graph& g, Variant v,
                           const std::function<bool(const Labeling&)>& pred) {
    if (g.n > 12) throw std::invalid_argument("optima enumeration requires n <= 12");
    SolveResult base = solve(g, v);
    bool found = false;
    Search s(g, v, base.value);
    s.each_optimum(0, 0, base.value, [&](const Labeling& l) {
        if (pred(l)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

namespace {

struct CoverSearch {
    const Graph& g;
    int n;
    std::vector<int> order;
    std::vector<int> value;  // -1 undecided, 0 out, 1 in
    long long nodes = 0;
    long long budget = LLONG_MAX;
    bool exhausted = false;
    int ub;
    std::vector<int> best;
    bool have_best = false;

    explicit CoverSearch(const Graph& graph) : g(graph), n(graph.n), value(n, -1), ub(n) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
    }

    bool exclude_ok(int v) const {
        for (int w : g.adj[v])
            if (value[w] == 0) return false;
        return true;
    }

    void improve(int k, int w) {
        if (k == n) {
            ub = w;
            best = value;
            have_best = true;
            return;
        }
        int v = order[k];
        for (int val : {0, 1}) {
            if (w + val >= ub) break;
            if (++nodes > budget) { exhausted = true; break; }
            value[v] = val;
            if (val != 0 || exclude_ok(v)) improve(k + 1, w + val);
            if (exhausted) break;
        }
        value[v] = -1;
    }

    // Include-first in id order yields the lexicographically smallest cover.
    bool certificate(int k, int w, int bound) {
        if (k == n) {
            best = value;
            return true;
        }
        for (int val : {1, 0}) {
            if (w + val > bound) continue;
            if (++nodes > budget) { exhausted = true; return false; }
            value[k] = val;
            if ((val != 0 || exclude_ok(k)) && certificate(k + 1, w + val, bound)) return true;
            if (exhausted) return false;
        }
        value[k] = -1;
        return false;
    }
};

}  // namespace

VertexCover min_vertex_cover(const Graph& g, const SolveOptions& opts) {
    if (g.n < 1) throw std::invalid_argument("vertex cover requires n >= 1");
    if (g.n > kHardSizeCap) throw std::invalid_argument("instance too large (n > 64)");
    if (g.n > kDefaultSizeCap && !opts.node_budget)
        throw std::invalid_argument(
            "instance too large for default budget (n > 24); set an explicit node budget");
    CoverSearch s(g);
    if (opts.node_budget) s.budget = *opts.node_budget;
    s.improve(0, 0);
    if (s.exhausted) {
        SolveResult inc;
        Labeling lab(g.n, 1);
        if (s.have_best) lab.assign(s.best.begin(), s.best.end());
        inc.certificate = lab;
        inc.value = weight(lab);
        inc.nodes_explored = s.nodes;
        inc.optimal = false;
        throw BudgetExhausted(std::move(inc));
    }
    int opt = s.ub;
    std::fill(s.value.begin(), s.value.end(), -1);
    if (!s.certificate(0, 0, opt)) {
        if (s.exhausted) throw std::runtime_error("node budget exhausted");
        throw std::logic_error("cover reconstruction failed");
    }
    VertexCover out;
    out.size = opt;
    for (int v = 0; v < g.n; ++v)
        if (s.best[v] == 1) out.cover.push_back(v);
    return out;
}

}  // namespace rdrd
