#ifndef RDRD_FAMILIES_HPP
#define RDRD_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdrd/graph.hpp"

namespace rdrd {

enum class FamilyKind {
    Path,                 // path:n          P_n, n >= 1
    Cycle,                // cycle:n         C_n, n >= 3
    Complete,             // complete:n      K_n, n >= 1
    CompleteBipartite,    // bipartite:m,n   K_{m,n}, m,n >= 1
    CompleteMultipartite, // multipartite:n1,n2,...  at least 2 parts
    Star,                 // star:m          K_{1,m}, m >= 1 leaves
    DoubleStar,           // doublestar:p,q  1 <= p <= q
    WoundedSpider,        // ws:n,t          K_{1,n} with t <= n subdivided edges
    SubdividedStar,       // subdivided:k    S(K_{1,k}), every edge subdivided once
    HFamily,              // h:n             n >= 4 even
    FFamily,              // f:n             n >= 3 odd
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

// Canonical vertex numbering per family:
//   Path/Cycle: 0..n-1 along the path/cycle.
//   Complete: any; CompleteBipartite/Multipartite: parts as consecutive blocks.
//   Star: center 0, leaves 1..m.
//   DoubleStar: centers 0 (p leaves) and 1 (q leaves); leaves of 0 first.
//   WoundedSpider: center 0; subdivided legs as (mid, leaf) pairs 1,2 / 3,4 / ...;
//     then the t..n-1 direct leaves.
//   SubdividedStar(k) equals WoundedSpider(k, k).
//   HFamily: hub 0, pendant 1, K_2 pairs (2,3), (4,5), ...
//   FFamily: hub 0, K_2 pairs (1,2), (3,4), ...
Graph generate(const FamilySpec& spec);

// Structural recognizers for the two extremal families: degree multiset plus
// local adjacency, no general isomorphism machinery. K_3 is reported as F_3.
std::optional<int> recognize_H(const Graph& g);
std::optional<int> recognize_F(const Graph& g);

// True for K_{1,m} (any center id); degenerate K_1 and K_2 count as stars.
bool is_star(const Graph& g);

// "name:params" syntax used by the CLI, e.g. "path:10", "ws:5,4".
FamilySpec parse_family_spec(const std::string& text);
std::string family_to_string(const FamilySpec& spec);

}  // namespace rdrd

#endif
