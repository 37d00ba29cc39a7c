#include "rdrd/labeling.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdrd {

int max_label(Variant v) {
    switch (v) {
        case Variant::RD: return 1;
        case Variant::RRD: return 2;
        case Variant::DRD:
        case Variant::RDRD: return 3;
    }
    throw std::logic_error("unknown variant");
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::RD: return "rd";
        case Variant::RRD: return "rrd";
        case Variant::DRD: return "drd";
        case Variant::RDRD: return "rdrd";
    }
    throw std::logic_error("unknown variant");
}

Variant parse_variant(const std::string& name) {
    if (name == "rd") return Variant::RD;
    if (name == "rrd") return Variant::RRD;
    if (name == "drd") return Variant::DRD;
    if (name == "rdrd") return Variant::RDRD;
    throw std::invalid_argument("unknown variant: " + name);
}

int weight(const Labeling& l) {
    return std::accumulate(l.begin(), l.end(), 0);
}

ValidityReport is_valid(const Graph& g, const Labeling& l, Variant v) {
    if (static_cast<int>(l.size()) != g.n)
        throw std::invalid_argument("labeling length " + std::to_string(l.size()) +
                                    " does not match graph order " + std::to_string(g.n));
    const int dmax = max_label(v);
    for (int u = 0; u < g.n; ++u)
        if (l[u] < 0 || l[u] > dmax)
            throw std::invalid_argument("label " + std::to_string(l[u]) + " at vertex " +
                                        std::to_string(u) + " outside domain of " +
                                        variant_name(v));
    ValidityReport rep;
    auto fail = [&](int u, const char* rule, std::string msg) {
        rep.valid = false;
        rep.violations.push_back({u, rule, std::move(msg)});
    };
    for (int u = 0; u < g.n; ++u) {
        int ones = 0, twos = 0, threes = 0, zeros = 0;
        for (int w : g.adj[u]) {
            switch (l[w]) {
                case 0: ++zeros; break;
                case 1: ++ones; break;
                case 2: ++twos; break;
                default: ++threes; break;
            }
        }
        switch (v) {
            case Variant::RD:
                if (l[u] == 0) {
                    if (ones == 0)
                        fail(u, "rd-domination", "vertex outside the set has no neighbor in it");
                    if (zeros == 0)
                        fail(u, "rd-restrained", "vertex outside the set has no neighbor outside it");
                }
                break;
            case Variant::RRD:
                if (l[u] == 0) {
                    if (twos == 0)
                        fail(u, "roman-zero-coverage", "0-vertex has no neighbor labeled 2");
                    if (zeros == 0)
                        fail(u, "restrained-isolated-zero", "0-vertex has no 0-neighbor");
                }
                break;
            case Variant::DRD:
            case Variant::RDRD:
                if (l[u] == 0) {
                    if (threes == 0 && twos < 2)
                        fail(u, "drd-zero-coverage",
                             "0-vertex needs two neighbors labeled 2 or one labeled 3");
                    if (v == Variant::RDRD && zeros == 0)
                        fail(u, "restrained-isolated-zero", "0-vertex has no 0-neighbor");
                } else if (l[u] == 1) {
                    if (twos + threes == 0)
                        fail(u, "drd-one-coverage", "1-vertex has no neighbor labeled >= 2");
                }
                break;
        }
    }
    return rep;
}

Labeling parse_labeling(const std::string& text) {
    std::istringstream in(text);
    Labeling l;
    long long v;
    while (in >> v) {
        if (v < 0 || v > 3) throw std::invalid_argument("label out of range: " + std::to_string(v));
        l.push_back(static_cast<int>(v));
    }
    if (!in.eof()) throw std::invalid_argument("malformed labeling text");
    return l;
}

std::string serialize_labeling(const Labeling& l) {
    std::ostringstream out;
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
    return out.str();
}

}  // namespace rdrd
