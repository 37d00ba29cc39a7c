#ifndef RDRD_LABELING_HPP
#define RDRD_LABELING_HPP

#include <string>
#include <vector>

#include "rdrd/graph.hpp"

namespace rdrd {

// Which domination definition applies. RD uses labels {0,1} (1 = in the set),
// RRD {0,1,2}, DRD and RDRD {0,1,2,3}.
enum class Variant { RD, RRD, DRD, RDRD };

int max_label(Variant v);
std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

using Labeling = std::vector<int>;

int weight(const Labeling& l);

struct Violation {
    int vertex;
    std::string rule;  // drd-zero-coverage, drd-one-coverage,
                       // restrained-isolated-zero, rd-domination,
                       // rd-restrained, roman-zero-coverage
    std::string message;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Checks every vertex and reports all failures. Throws on length or
// label-domain mismatch.
ValidityReport is_valid(const Graph& g, const Labeling& l, Variant v);

// Text format: one line of space-separated labels, vertex order 0..n-1.
Labeling parse_labeling(const std::string& text);
std::string serialize_labeling(const Labeling& l);

}  // namespace rdrd

#endif
