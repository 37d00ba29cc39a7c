#include "rdrd/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdrd {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(parts.size() >= 2, "multipartite: need at least 2 parts");
    for (int p : parts) require(p >= 1, "multipartite: part sizes must be positive");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(n);
    int id = 0;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[id++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return new_graph(n, std::move(edges));
}

Graph wounded_spider(int n, int t) {
    require(n >= 1, "ws: n >= 1 required");
    require(t >= 0 && t <= n, "ws: 0 <= t <= n required");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < t; ++i) {
        int mid = next++, leaf = next++;
        edges.emplace_back(0, mid);
        edges.emplace_back(mid, leaf);
    }
    for (int i = t; i < n; ++i) edges.emplace_back(0, next++);
    return new_graph(next, std::move(edges));
}

Graph hub_with_pairs(int pairs, bool pendant) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    if (pendant) edges.emplace_back(0, next++);
    for (int i = 0; i < pairs; ++i) {
        int a = next++, b = next++;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    return new_graph(next, std::move(edges));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t k) {
        require(p.size() == k, family_to_string(spec) + ": wrong parameter count");
    };
    switch (spec.kind) {
        case FamilyKind::Path: {
            arity(1);
            require(p[0] >= 1, "path: n >= 1 required");
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
            return new_graph(p[0], std::move(edges));
        }
        case FamilyKind::Cycle: {
            arity(1);
            require(p[0] >= 3, "cycle: n >= 3 required");
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, p[0] - 1);
            return new_graph(p[0], std::move(edges));
        }
        case FamilyKind::Complete: {
            arity(1);
            require(p[0] >= 1, "complete: n >= 1 required");
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < p[0]; ++u)
                for (int v = u + 1; v < p[0]; ++v) edges.emplace_back(u, v);
            return new_graph(p[0], std::move(edges));
        }
        case FamilyKind::CompleteBipartite:
            arity(2);
            require(p[0] >= 1 && p[1] >= 1, "bipartite: m,n >= 1 required");
            return complete_multipartite({p[0], p[1]});
        case FamilyKind::CompleteMultipartite:
            return complete_multipartite(p);
        case FamilyKind::Star:
            arity(1);
            require(p[0] >= 1, "star: m >= 1 required");
            return wounded_spider(p[0], 0);
        case FamilyKind::DoubleStar: {
            arity(2);
            require(1 <= p[0] && p[0] <= p[1], "doublestar: 1 <= p <= q required");
            std::vector<std::pair<int, int>> edges{{0, 1}};
            int next = 2;
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, next++);
            for (int i = 0; i < p[1]; ++i) edges.emplace_back(1, next++);
            return new_graph(next, std::move(edges));
        }
        case FamilyKind::WoundedSpider:
            arity(2);
            return wounded_spider(p[0], p[1]);
        case FamilyKind::SubdividedStar:
            arity(1);
            require(p[0] >= 1, "subdivided: k >= 1 required");
            return wounded_spider(p[0], p[0]);
        case FamilyKind::HFamily:
            arity(1);
            require(p[0] >= 4 && p[0] % 2 == 0, "h: even n >= 4 required");
            return hub_with_pairs((p[0] - 2) / 2, true);
        case FamilyKind::FFamily:
            arity(1);
            require(p[0] >= 3 && p[0] % 2 == 1, "f: odd n >= 3 required");
            return hub_with_pairs((p[0] - 1) / 2, false);
    }
    throw std::logic_error("unknown family kind");
}

namespace {

// Shared hub/pairs check: every non-special vertex has degree 2 and is
// adjacent to the hub plus exactly one other degree-2 vertex, reciprocally.
bool pairs_ok(const Graph& g, int hub, const std::vector<int>& others) {
    std::vector<int> partner(g.n, -1);
    for (int v : others) {
        if (g.degree(v) != 2) return false;
        int other = -1;
        bool saw_hub = false;
        for (int w : g.adj[v]) {
            if (w == hub) saw_hub = true;
            else other = w;
        }
        if (!saw_hub || other < 0) return false;
        partner[v] = other;
    }
    for (int v : others)
        if (partner[v] < 0 || partner[partner[v]] != v || partner[v] == v) return false;
    return true;
}

}  // namespace

std::optional<int> recognize_H(const Graph& g) {
    int n = g.n;
    if (n < 4 || n % 2 != 0) return std::nullopt;
    int hub = -1, pendant = -1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == n - 1) {
            if (hub >= 0) return std::nullopt;
            hub = v;
        } else if (d == 1) {
            if (pendant >= 0) return std::nullopt;
            pendant = v;
        } else if (d == 2) {
            rest.push_back(v);
        } else {
            return std::nullopt;
        }
    }
    if (hub < 0 || pendant < 0 || !g.has_edge(hub, pendant)) return std::nullopt;
    if (static_cast<int>(rest.size()) != n - 2 || !pairs_ok(g, hub, rest))
        return std::nullopt;
    return n;
}

std::optional<int> recognize_F(const Graph& g) {
    int n = g.n;
    if (n < 3 || n % 2 != 1) return std::nullopt;
    if (n == 3) {
        // F_3 degenerates to K_3.
        return g.size() == 3 ? std::optional<int>(3) : std::nullopt;
    }
    int hub = -1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == n - 1) {
            if (hub >= 0) return std::nullopt;
            hub = v;
        } else if (d == 2) {
            rest.push_back(v);
        } else {
            return std::nullopt;
        }
    }
    if (hub < 0 || static_cast<int>(rest.size()) != n - 1 || !pairs_ok(g, hub, rest))
        return std::nullopt;
    return n;
}

bool is_star(const Graph& g) {
    if (g.n < 1 || g.size() != g.n - 1 || !is_connected(g)) return false;
    if (g.n <= 2) return true;
    int centers = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) ++centers;
    return centers == 1;
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        if (rest.empty() || rest.back() == ',')
            throw std::invalid_argument("bad family parameter list: " + text);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family parameter: " + tok);
            }
            if (pos != tok.size()) throw std::invalid_argument("bad family parameter: " + tok);
            params.push_back(v);
        }
    }
    static const std::vector<std::pair<std::string, FamilyKind>> names = {
        {"path", FamilyKind::Path},
        {"cycle", FamilyKind::Cycle},
        {"complete", FamilyKind::Complete},
        {"bipartite", FamilyKind::CompleteBipartite},
        {"multipartite", FamilyKind::CompleteMultipartite},
        {"star", FamilyKind::Star},
        {"doublestar", FamilyKind::DoubleStar},
        {"ws", FamilyKind::WoundedSpider},
        {"subdivided", FamilyKind::SubdividedStar},
        {"h", FamilyKind::HFamily},
        {"f", FamilyKind::FFamily},
    };
    for (const auto& [nm, kind] : names)
        if (nm == name) return FamilySpec{kind, std::move(params)};
    throw std::invalid_argument("unknown family name: " + name);
}

std::string family_to_string(const FamilySpec& spec) {
    static const char* names[] = {"path", "cycle", "complete", "bipartite",
                                  "multipartite", "star", "doublestar", "ws",
                                  "subdivided", "h", "f"};
    std::string out = names[static_cast<int>(spec.kind)];
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
    return out;
}

}  // namespace rdrd
