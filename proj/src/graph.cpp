#include "rdrd/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rdrd {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph new_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge id out of range (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].first) +
                                        "," + std::to_string(edges[i].second) + ")");
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw std::invalid_argument("negative header value");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("token count mismatch: expected " +
                                        std::to_string(m) + " edges");
        if (u >= v)
            throw std::invalid_argument("edge line " + std::to_string(i + 1) +
                                        ": expected u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing tokens after edge list");
    return new_graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("connectivity undefined for empty graph");
    auto dist = bfs_dist(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int diameter(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("diameter undefined for empty graph");
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto dist = bfs_dist(g, s);
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter undefined: graph disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

struct CycleSearch {
    const Graph& g;
    int start = 0;
    int best = 0;
    std::uint32_t on_path = 0;

    // Simple paths from `start` through vertices >= start only, so each cycle
    // is visited with its minimum vertex as anchor.
    void extend(int v, int len) {
        for (int w : g.adj[v]) {
            if (w == start && len >= 3) best = std::max(best, len);
            if (w <= start || (on_path >> w) & 1) continue;
            if (best == g.n) return;
            on_path |= 1u << w;
            extend(w, len + 1);
            on_path &= ~(1u << w);
        }
    }
};

}  // namespace

std::optional<int> circumference(const Graph& g) {
    if (g.n > 16)
        throw std::invalid_argument("instance too large for exact circumference (n > 16)");
    CycleSearch cs{g};
    for (int s = 0; s < g.n && cs.best < g.n; ++s) {
        cs.start = s;
        cs.on_path = 1u << s;
        cs.extend(s, 1);
    }
    if (cs.best == 0) return std::nullopt;
    return cs.best;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges) {
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i; else ++j;
        }
    }
    return false;
}

TreeStats tree_stats(const Graph& g) {
    TreeStats st;
    if (g.n == 0) return st;
    st.is_tree = g.size() == g.n - 1 && is_connected(g);
    if (!st.is_tree) return st;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) ++st.leaves;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 2 && g.n != 2) continue;
        bool near_leaf = false;
        for (int w : g.adj[v]) near_leaf = near_leaf || g.degree(w) == 1;
        if (near_leaf) ++st.supports;
    }
    return st;
}

namespace {

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
    if (n > 7) throw std::invalid_argument("sweep too large (n > 7)");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) edges.push_back(pairs[k]);
        Graph g = new_graph(n, std::move(edges));
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    enumerate_graphs(n, true, fn);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    enumerate_graphs(n, false, fn);
}

std::uint64_t count_connected_graphs(int n) {
    std::uint64_t count = 0;
    for_each_connected_graph(n, [&](const Graph&) { ++count; });
    return count;
}

namespace {

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int a : seq) ++deg[a];
    std::vector<std::pair<int, int>> edges;
    std::uint64_t leaf_mask = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaf_mask |= 1ull << v;
    for (int a : seq) {
        int leaf = std::countr_zero(leaf_mask);
        leaf_mask &= leaf_mask - 1;
        edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
        if (--deg[a] == 1) leaf_mask |= 1ull << a;
    }
    int u = std::countr_zero(leaf_mask);
    leaf_mask &= leaf_mask - 1;
    int v = std::countr_zero(leaf_mask);
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return new_graph(n, std::move(edges));
}

}  // namespace

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 2) throw std::invalid_argument("tree enumeration requires n >= 2");
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(tree_from_pruefer(seq, n));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

}  // namespace rdrd
