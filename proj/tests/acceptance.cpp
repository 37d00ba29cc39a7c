// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Each criterion prints enough detail to diagnose a
// failure without rerunning by hand.

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "rdrd/bounds.hpp"
#include "rdrd/families.hpp"
#include "rdrd/formulas.hpp"
#include "rdrd/graph.hpp"
#include "rdrd/reduction.hpp"
#include "rdrd/solver.hpp"

using namespace rdrd;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int number, const char* title, bool pass) {
    std::cout << "criterion " << number << " (" << title << "): "
              << (pass ? "PASS" : "FAIL") << '\n';
    if (!pass) {
        std::cout << detail.str();
        ++failures;
    }
    detail.str("");
    detail.clear();
}

// ---------------------------------------------------------------- criterion 1

// Solves the family with the closed-form value as a trusted upper bound and
// compares. Returns the serialized certificate for the determinism check.
bool expect_family(const std::string& spec_text, int expected, std::string* cert = nullptr) {
    FamilySpec spec = parse_family_spec(spec_text);
    Graph g = generate(spec);
    SolveOptions opts;
    opts.initial_upper_bound = expected;
    SolveResult res;
    try {
        res = solve(g, Variant::RDRD, opts);
    } catch (const std::exception& e) {
        detail << "  " << spec_text << ": solver failed: " << e.what() << '\n';
        return false;
    }
    if (cert) *cert = serialize_labeling(res.certificate);
    if (res.value != expected) {
        detail << "  " << spec_text << ": solved " << res.value << ", formula says "
               << expected << '\n';
        return false;
    }
    return true;
}

std::vector<std::pair<std::string, int>> family_table() {
    std::vector<std::pair<std::string, int>> table;
    auto formula = [](const std::string& s) { return predicted_rdrd(parse_family_spec(s))->value; };
    for (int n = 4; n <= 15; ++n) table.emplace_back("path:" + std::to_string(n), n + 2);
    for (int n = 3; n <= 15; ++n)
        table.emplace_back("cycle:" + std::to_string(n), n % 3 == 0 ? n : n + 2);
    for (int n = 2; n <= 9; ++n) table.emplace_back("complete:" + std::to_string(n), 3);
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 5; ++n)
            table.emplace_back("bipartite:" + std::to_string(m) + "," + std::to_string(n), 6);
    for (int m = 1; m <= 8; ++m) table.emplace_back("star:" + std::to_string(m), m + 2);
    // sampled part-lists with min part 1 or >= 3; a smallest part of exactly
    // 2 admits weight 4 (two 2s on that part), so the 3-or-6 rule only covers
    // these two regimes
    for (const char* parts : {"1,1,1", "1,2,2", "1,3,3", "1,2,3", "1,1,2,2", "3,3,3",
                              "3,3,4", "3,4,4", "4,4,4", "1,3,3,3"}) {
        std::string s = std::string("multipartite:") + parts;
        table.emplace_back(s, formula(s));
    }
    for (int p = 1; p <= 5; ++p)
        for (int q = p; p + q + 2 <= 13; ++q)
            table.emplace_back("doublestar:" + std::to_string(p) + "," + std::to_string(q),
                               p + q + 4);
    for (int n : {4, 6, 8, 10}) table.emplace_back("h:" + std::to_string(n), 4);
    for (int n : {3, 5, 7, 9}) table.emplace_back("f:" + std::to_string(n), 3);
    for (int k : {3, 4}) table.emplace_back("subdivided:" + std::to_string(k), 3 * k);
    return table;
}

bool criterion1(std::map<std::string, std::string>* certs = nullptr) {
    bool ok = true;
    for (const auto& [spec, expected] : family_table()) {
        std::string cert;
        ok &= expect_family(spec, expected, &cert);
        if (certs) (*certs)[spec] = cert;
    }
    // the subdivided stars additionally have restrained Roman weight 2k + 1
    for (int k : {3, 4}) {
        Graph g = generate({FamilyKind::SubdividedStar, {k}});
        int rr = solve(g, Variant::RRD).value;
        if (rr != 2 * k + 1) {
            detail << "  subdivided:" << k << ": restrained Roman weight " << rr
                   << ", expected " << 2 * k + 1 << '\n';
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    bool ok = true;
    long long swept = 0;
    for (int n = 1; n <= 6; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            ++swept;
            ParameterSet params = compute_parameters(g);
            for (const auto& e : evaluate_bounds(g, params)) {
                if (e.applicable && !e.holds) {
                    detail << "  " << e.id << " violated on: " << serialize_edge_list(g);
                    ok = false;
                }
                // B5 equality characterization is exactness of the extremal set
                if (e.characterization_ok && !*e.characterization_ok) {
                    detail << "  " << e.id << " equality set mismatch on: "
                           << serialize_edge_list(g);
                    ok = false;
                }
            }
        });
    }
    detail << "  (swept " << swept << " connected graphs)\n";
    // B8 equality on the all-graphs sweep occurs exactly on edgeless graphs
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            int rdr = solve(g, Variant::RDRD).value;
            int rr = solve(g, Variant::RRD).value;
            if ((rdr == 2 * rr) != (g.size() == 0)) {
                detail << "  B8 equality mismatch on: " << serialize_edge_list(g);
                ok = false;
            }
        });
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    bool ok = true;
    long long applicable = 0;
    for (int n = 1; n <= 6; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            auto res = check_lemma_nonpendant(g);
            if (!res) return;  // no non-pendant edge
            ++applicable;
            if (!*res) {
                detail << "  no optimum touches label 0/1 on: " << serialize_edge_list(g);
                ok = false;
            }
        });
    }
    detail << "  (checked " << applicable << " graphs with a non-pendant edge)\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    bool ok = true;
    long long swept = 0;
    for (int n = 2; n <= 8; ++n) {
        for_each_labeled_tree(n, [&](const Graph& g) {
            ++swept;
            ParameterSet params;
            params.rdr = solve(g, Variant::RDRD).value;
            params.r = solve(g, Variant::RD).value;
            params.tree = tree_stats(g);
            params.connected = true;
            for (const auto& e : evaluate_bounds(g, params)) {
                if (e.id != "B9" && e.id != "B10" && e.id != "B11") continue;
                if (e.applicable && !e.holds) {
                    detail << "  " << e.id << " violated on tree: " << serialize_edge_list(g);
                    ok = false;
                }
                if (e.id == "B11" && e.characterization_ok && !*e.characterization_ok) {
                    detail << "  B11 equality is not star-exact on: " << serialize_edge_list(g);
                    ok = false;
                }
            }
        });
    }
    detail << "  (swept " << swept << " labeled trees)\n";

    // listed members of the upper-bound equality family (membership direction)
    std::vector<std::string> members = {"path:2", "path:3", "path:4", "path:5",
                                        "doublestar:1,2"};
    for (int n = 2; n <= 5; ++n) {
        members.push_back("ws:" + std::to_string(n) + "," + std::to_string(n - 1));
        if (n >= 3) members.push_back("ws:" + std::to_string(n) + "," + std::to_string(n - 2));
    }
    for (const auto& spec : members) {
        Graph g = generate(parse_family_spec(spec));
        int rdr = solve(g, Variant::RDRD).value;
        int bound = (3 * g.n - 1 + 1) / 2;  // ceil((3n - 1) / 2)
        if (rdr != bound) {
            detail << "  " << spec << ": value " << rdr << " misses the tree bound " << bound
                   << '\n';
            if (spec.rfind("ws:", 0) == 0) {
                detail << "  (spiders with all legs but one subdivided come in one below\n"
                       << "  the bound for three or more legs; confirmed by exhaustive scan\n"
                       << "  at order 6, so this membership claim is unattainable)\n";
            }
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5(std::string* k2_cert = nullptr) {
    bool ok = true;

    // K_2: vc = 1, host optimum must be 3*1 + 3 = 6
    {
        Graph k2 = generate({FamilyKind::Path, {2}});
        ReductionInstance inst = build_reduction(k2);
        verify_structure(inst);
        SolveOptions opts;
        opts.seed = cover_to_labeling(inst, min_vertex_cover(k2).cover);
        SolveResult res = solve(inst.host, Variant::RDRD, opts);
        if (k2_cert) *k2_cert = serialize_labeling(res.certificate);
        if (res.value != 6) {
            detail << "  host of K_2: value " << res.value << ", expected 6\n";
            ok = false;
        }
        std::vector<int> cover = labeling_to_cover(inst, res.certificate, 1);
        if (cover.size() != 1) {
            detail << "  host of K_2: extracted cover has size " << cover.size() << '\n';
            ok = false;
        }
    }

    // K_1: the stated value 3*vc + 3 = 3. The exact optimum is 4: the empty
    // cover's labeling puts 0 on the lone source vertex, whose only neighbor
    // is the hub, so the restrained condition fails and weight 3 is
    // unattainable. The criterion is checked as written and fails honestly.
    {
        Graph k1 = new_graph(1, {});
        ReductionInstance inst = build_reduction(k1);
        verify_structure(inst);
        SolveResult res = solve(inst.host, Variant::RDRD);
        if (res.value != 3) {
            detail << "  host of K_1: value " << res.value << ", stated value 3\n"
                   << "  (weight 3 requires label 0 on the source vertex, whose only\n"
                   << "  neighbor is the hub; a 0-vertex needs a 0-neighbor, so the\n"
                   << "  stated value is unattainable and the true optimum is 4)\n";
            ok = false;
        }
    }

    // constructive direction on P_3, P_4, K_3
    for (const char* spec : {"path:3", "path:4", "complete:3"}) {
        Graph g = generate(parse_family_spec(spec));
        ReductionInstance inst = build_reduction(g);
        try {
            verify_structure(inst);
        } catch (const std::exception& e) {
            detail << "  " << spec << ": " << e.what() << '\n';
            ok = false;
            continue;
        }
        VertexCover vc = min_vertex_cover(g);
        Labeling l = cover_to_labeling(inst, vc.cover);
        if (!is_valid(inst.host, l, Variant::RDRD).valid || weight(l) != 3 * vc.size + 3) {
            detail << "  " << spec << ": cover labeling invalid or of wrong weight\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    bool ok = true;
    long long swept = 0;
    for (int n = 1; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            ++swept;
            for (Variant v : {Variant::RD, Variant::RRD, Variant::DRD, Variant::RDRD}) {
                auto brute = oracles::brute_force(g, v);
                SolveResult res = solve(g, v);
                if (res.value != brute.value || res.certificate != brute.best) {
                    detail << "  " << variant_name(v)
                           << " mismatch on: " << serialize_edge_list(g);
                    ok = false;
                }
            }
        });
    }
    detail << "  (swept " << swept << " graphs x 4 variants)\n";
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7(const std::map<std::string, std::string>& certs1, const std::string& k2_cert) {
    bool ok = true;
    std::map<std::string, std::string> rerun;
    criterion1(&rerun);
    detail.str("");  // criterion 1's own verdict was already reported
    detail.clear();
    for (const auto& [spec, cert] : certs1) {
        if (rerun[spec] != cert) {
            detail << "  certificate for " << spec << " differs between runs\n";
            ok = false;
        }
    }
    std::string k2_again;
    criterion5(&k2_again);
    detail.str("");
    detail.clear();
    if (k2_again != k2_cert) {
        detail << "  certificate for the K_2 host differs between runs\n";
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    std::map<std::string, std::string> certs1;
    std::string k2_cert;

    report(1, "family formulas", criterion1(&certs1));
    report(2, "exhaustive bound soundness", criterion2());
    report(3, "small-label lemma sweep", criterion3());
    report(4, "tree sweep", criterion4());
    report(5, "vertex-cover reduction", criterion5(&k2_cert));
    report(6, "oracle equivalence", criterion6());
    report(7, "determinism", criterion7(certs1, k2_cert));

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << '\n';
    return failures;
}
