#ifndef RDRD_GRAPH_HPP
#define RDRD_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rdrd {

// Simple undirected graph with contiguous 0-based vertex ids.
// Immutable after construction; neighbor lists and the edge list are sorted.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted

    int order() const { return n; }
    int size() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n == other.n && edges == other.edges;
    }
};

Graph new_graph(int n, std::vector<std::pair<int, int>> edges);

// Text format: "n m" header, then m lines "u v" with 0 <= u < v < n.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

bool is_connected(const Graph& g);

// Max shortest-path distance over all pairs; throws on disconnected input.
int diameter(const Graph& g);

// Length of a longest cycle, found exhaustively; nullopt when acyclic.
// Throws for n > 16.
std::optional<int> circumference(const Graph& g);

bool has_triangle(const Graph& g);

struct TreeStats {
    bool is_tree = false;
    int leaves = 0;
    int supports = 0;
};

// leaves/supports are reported as 0 when g is not a tree.
// For n = 2 both endpoints count as supports.
TreeStats tree_stats(const Graph& g);

// All connected labeled graphs on n vertices, in increasing edge-bitmask
// order (bit k = k-th pair in lexicographic order). Requires n <= 7.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::uint64_t count_connected_graphs(int n);

// All labeled graphs on n vertices (connected or not), same order. n <= 7.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// All n^(n-2) labeled trees on n >= 2 vertices via Pruefer sequences,
// in increasing sequence order.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);

}  // namespace rdrd

#endif
