#ifndef RDRD_BOUNDS_HPP
#define RDRD_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdrd/labeling.hpp"
#include "rdrd/solver.hpp"

namespace rdrd {

// Solved parameters and structural data for one instance. Bounds never
// recompute any of these; entries lacking an input are marked inapplicable.
struct ParameterSet {
    std::optional<int> rdr;  // restrained double Roman domination number
    std::optional<int> rr;   // restrained Roman domination number
    std::optional<int> r;    // restrained domination number
    std::optional<int> dr;   // double Roman domination number
    std::optional<Labeling> rr_certificate;
    std::optional<int> diam;
    bool circ_known = false;          // false when skipped (size cap)
    std::optional<int> circ;          // empty with circ_known: acyclic
    std::optional<TreeStats> tree;
    bool connected = false;
};

// Fills every field the solver and graph queries can provide.
ParameterSet compute_parameters(const Graph& g, const SolveOptions& opts = {});

struct BoundEntry {
    std::string id;          // B1..B12
    std::string description;
    bool applicable = false;
    std::string reason;      // why inapplicable, empty otherwise
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    bool equality = false;
    std::optional<bool> characterization_ok;
};

using BoundReport = std::vector<BoundEntry>;

// The twelve inequality ledger entries, in fixed order B1..B12.
BoundReport evaluate_bounds(const Graph& g, const ParameterSet& params);

// True iff some optimal restrained double Roman labeling has a vertex
// labeled 0 or 1. nullopt when inapplicable (no non-pendant edge or n > 12).
std::optional<bool> check_lemma_nonpendant(const Graph& g);

struct EqualityStructureReport {
    bool applicable = false;  // requires rdr == 2*rr - 1
    bool matches = false;
    int branch = 0;           // 1: K_2 plus isolated vertices; 2: hub structure
    std::string detail;
};

// Necessary structure of graphs with rdr == 2*rr - 1.
EqualityStructureReport check_equality_structures(const Graph& g, const ParameterSet& params);

}  // namespace rdrd

#endif
