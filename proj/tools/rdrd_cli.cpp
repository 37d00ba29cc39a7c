// Command-line front end: exact solves, certificate checking, bound ledgers,
// verification sweeps, and the vertex-cover host construction.
//
// Exit codes: 0 success/valid, 1 semantic failure (invalid certificate or
// counterexample), 2 usage/format error, 3 node budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdrd/bounds.hpp"
#include "rdrd/families.hpp"
#include "rdrd/formulas.hpp"
#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"
#include "rdrd/reduction.hpp"
#include "rdrd/solver.hpp"

using nlohmann::json;
using namespace rdrd;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct InstanceInput {
    std::string file;
    std::string family;

    Graph load(json* descriptor = nullptr) const {
        if (file.empty() == family.empty())
            throw std::invalid_argument("need exactly one of --file or --family");
        if (!file.empty()) {
            if (descriptor) *descriptor = {{"kind", "file"}, {"path", file}};
            return parse_edge_list(read_file(file));
        }
        if (descriptor) *descriptor = {{"kind", "family"}, {"spec", family}};
        return generate(parse_family_spec(family));
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--file", file, "graph in edge-list format");
        cmd->add_option("--family", family, "family spec, e.g. path:10 or ws:5,4");
    }
};

SolveOptions options_from_env() {
    SolveOptions opts;
    if (const char* env = std::getenv("RDRD_NODE_BUDGET")) {
        opts.node_budget = std::stoll(env);
    }
    return opts;
}

json bounds_to_json(const BoundReport& report) {
    json arr = json::array();
    for (const auto& e : report) {
        json j = {{"id", e.id},
                  {"applicable", e.applicable},
                  {"holds", e.applicable && e.holds},
                  {"equality", e.applicable && e.equality}};
        if (e.applicable) {
            j["lhs"] = e.lhs;
            j["rhs"] = e.rhs;
        } else {
            j["lhs"] = nullptr;
            j["rhs"] = nullptr;
            j["reason"] = e.reason;
        }
        if (e.characterization_ok) j["characterization_ok"] = *e.characterization_ok;
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_solve(const InstanceInput& input, const std::string& variant_name, bool enumerate,
              bool as_json) {
    json descriptor;
    Graph g = input.load(&descriptor);
    Variant v = parse_variant(variant_name);
    SolveOptions opts = options_from_env();
    opts.enumerate_all = enumerate;
    if (input.family.size()) {
        auto spec = parse_family_spec(input.family);
        if (v == Variant::RDRD)
            if (auto pred = predicted_rdrd(spec)) opts.initial_upper_bound = pred->value;
    }
    SolveResult res = solve(g, v, opts);
    if (as_json) {
        json rec = {{"instance", descriptor},
                    {"variant", variant_name},
                    {"value", res.value},
                    {"certificate", res.certificate},
                    {"stats",
                     {{"nodes", res.nodes_explored},
                      {"wall_seconds", res.wall_seconds},
                      {"optimal", res.optimal}}}};
        if (res.optima_count) rec["stats"]["optima_count"] = *res.optima_count;
        std::cout << rec.dump(2) << '\n';
    } else {
        std::cout << "value " << res.value << '\n'
                  << "certificate " << serialize_labeling(res.certificate);
        if (res.optima_count) std::cout << "optima " << *res.optima_count << '\n';
    }
    return 0;
}

int cmd_predict(const std::string& family) {
    auto spec = parse_family_spec(family);
    auto pred = predicted_rdrd(spec);
    if (!pred) {
        std::cout << "no closed form for " << family_to_string(spec) << '\n';
        return 1;
    }
    std::cout << "value " << pred->value << '\n' << "source " << pred->source << '\n';
    if (!pred->note.empty()) std::cout << "note " << pred->note << '\n';
    return 0;
}

int cmd_certify(const std::string& graph_path, const std::string& labeling_path,
                const std::string& variant_name) {
    Graph g = parse_edge_list(read_file(graph_path));
    Labeling l = parse_labeling(read_file(labeling_path));
    Variant v = parse_variant(variant_name);
    auto rep = is_valid(g, l, v);  // length/domain problems throw -> exit 2
    if (rep.valid) {
        std::cout << "valid, weight " << weight(l) << '\n';
        return 0;
    }
    for (const auto& viol : rep.violations)
        std::cout << "vertex " << viol.vertex << ": " << viol.rule << " (" << viol.message
                  << ")\n";
    return 1;
}

int cmd_bounds(const InstanceInput& input, bool as_json) {
    json descriptor;
    Graph g = input.load(&descriptor);
    SolveOptions opts = options_from_env();
    ParameterSet params = compute_parameters(g, opts);
    BoundReport report = evaluate_bounds(g, params);
    if (as_json) {
        json rec = {{"instance", descriptor},
                    {"parameters",
                     {{"rdrd", *params.rdr},
                      {"rrd", *params.rr},
                      {"rd", *params.r},
                      {"drd", *params.dr}}},
                    {"bounds", bounds_to_json(report)}};
        std::cout << rec.dump(2) << '\n';
    } else {
        for (const auto& e : report) {
            std::cout << e.id << ' ';
            if (!e.applicable)
                std::cout << "n/a (" << e.reason << ")";
            else
                std::cout << (e.holds ? "holds" : "VIOLATED") << " lhs=" << e.lhs
                          << " rhs=" << e.rhs << (e.equality ? " equality" : "");
            std::cout << "  [" << e.description << "]\n";
        }
    }
    bool all_hold = true;
    for (const auto& e : report) all_hold = all_hold && (!e.applicable || e.holds);
    return all_hold ? 0 : 1;
}

void dump_counterexample(const Graph& g, const std::string& why) {
    json rec = {{"counterexample", why}, {"edge_list", serialize_edge_list(g)}};
    std::cout << rec.dump(2) << '\n';
}

int cmd_sweep(int graphs_n, int trees_n, const std::string& suite) {
    SolveOptions opts = options_from_env();
    long long instances = 0, counterexamples = 0;
    if (graphs_n > 0) {
        if (graphs_n > 6) throw std::invalid_argument("graph sweep capped at n <= 6");
        if (suite != "bounds" && suite != "lemma")
            throw std::invalid_argument("graph suites: bounds, lemma");
        for (int n = 1; n <= graphs_n; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                ++instances;
                if (suite == "bounds") {
                    auto params = compute_parameters(g, opts);
                    for (const auto& e : evaluate_bounds(g, params)) {
                        if (e.applicable && !e.holds) {
                            ++counterexamples;
                            dump_counterexample(g, e.id + " violated");
                        }
                        if (e.characterization_ok && !*e.characterization_ok) {
                            ++counterexamples;
                            dump_counterexample(g, e.id + " equality characterization mismatch");
                        }
                    }
                } else {
                    auto res = check_lemma_nonpendant(g);
                    if (res && !*res) {
                        ++counterexamples;
                        dump_counterexample(g, "no optimum with a 0- or 1-labeled vertex");
                    }
                }
            });
        }
    } else {
        if (trees_n < 2 || trees_n > 9) throw std::invalid_argument("tree sweep needs 2 <= n <= 9");
        if (suite != "tree-bounds") throw std::invalid_argument("tree suites: tree-bounds");
        for (int n = 2; n <= trees_n; ++n) {
            for_each_labeled_tree(n, [&](const Graph& g) {
                ++instances;
                ParameterSet params;
                params.rdr = solve(g, Variant::RDRD, opts).value;
                params.r = solve(g, Variant::RD, opts).value;
                params.tree = tree_stats(g);
                params.connected = true;
                for (const auto& e : evaluate_bounds(g, params)) {
                    if (e.id != "B9" && e.id != "B10" && e.id != "B11") continue;
                    if ((e.applicable && !e.holds) ||
                        (e.characterization_ok && !*e.characterization_ok)) {
                        ++counterexamples;
                        dump_counterexample(g, e.id + " failed");
                    }
                }
            });
        }
    }
    std::cout << "instances " << instances << ", counterexamples " << counterexamples << '\n';
    return counterexamples == 0 ? 0 : 1;
}

int cmd_reduce(const InstanceInput& input, std::optional<int> k, bool verify) {
    Graph g = input.load();
    ReductionInstance inst = build_reduction(g);
    verify_structure(inst);
    std::cout << serialize_edge_list(inst.host) << std::flush;
    json roles = json::array();
    for (int v = 0; v < inst.host.n; ++v) {
        const auto& role = inst.roles[v];
        json j = {{"id", v}};
        switch (role.role) {
            case HostRole::XCycle: j["role"] = "x"; j["index"] = role.index; break;
            case HostRole::Hub: j["role"] = "y"; break;
            case HostRole::Source: j["role"] = "source"; j["vertex"] = role.index; break;
            case HostRole::EdgeGadget:
                j["role"] = "u";
                j["edge"] = role.edge;
                j["index"] = role.index;
                break;
        }
        roles.push_back(std::move(j));
    }
    json meta = {{"m", inst.m_param}, {"roles", roles}};
    if (verify) {
        if (!k) throw std::invalid_argument("--verify requires -k");
        bool equivalent = verify_equivalence(g, *k, options_from_env());
        meta["k"] = *k;
        meta["equivalent"] = equivalent;
        std::cerr << meta.dump(2) << '\n';
        return equivalent ? 0 : 1;
    }
    std::cerr << meta.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verifier for restrained double Roman domination"};
    app.require_subcommand(1);

    InstanceInput solve_input, bounds_input, reduce_input, gen_input;
    std::string variant = "rdrd", certify_variant = "rdrd";
    bool enumerate = false, solve_json = false, bounds_json = false;
    std::string predict_family, certify_graph, certify_labeling, suite = "bounds";
    int graphs_n = 0, trees_n = 0;
    std::optional<int> reduce_k;
    bool reduce_verify = false;

    auto* gen = app.add_subcommand("gen", "emit a family instance as an edge list");
    gen->add_option("--family", gen_input.family, "family spec")->required();

    auto* sol = app.add_subcommand("solve", "exact optimum with certificate");
    solve_input.attach(sol);
    sol->add_option("--variant", variant, "rd | rrd | drd | rdrd");
    sol->add_flag("--enumerate", enumerate, "also count all optima (n <= 12)");
    sol->add_flag("--json", solve_json, "emit a JSON run record");

    auto* pred = app.add_subcommand("predict", "closed-form value where known");
    pred->add_option("--family", predict_family, "family spec")->required();

    auto* cert = app.add_subcommand("certify", "validate a labeling file");
    cert->add_option("--graph", certify_graph, "graph file")->required();
    cert->add_option("--labeling", certify_labeling, "labeling file")->required();
    cert->add_option("--variant", certify_variant, "rd | rrd | drd | rdrd");

    auto* bnd = app.add_subcommand("bounds", "evaluate the inequality ledger");
    bounds_input.attach(bnd);
    bnd->add_flag("--json", bounds_json, "emit JSON");

    auto* swp = app.add_subcommand("sweep", "exhaustive verification sweeps");
    swp->add_option("--graphs", graphs_n, "connected labeled graphs up to n (<= 6)");
    swp->add_option("--trees", trees_n, "labeled trees up to n (<= 9)");
    swp->add_option("--suite", suite, "bounds | lemma | tree-bounds");

    auto* red = app.add_subcommand("reduce", "build the vertex-cover host graph");
    reduce_input.attach(red);
    red->add_option("-k", reduce_k, "cover size for --verify");
    red->add_flag("--verify", reduce_verify, "solve both sides of the equivalence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // fold CLI11's error codes into "usage error"
    }

    try {
        if (gen->parsed()) {
            std::cout << serialize_edge_list(gen_input.load());
            return 0;
        }
        if (sol->parsed()) return cmd_solve(solve_input, variant, enumerate, solve_json);
        if (pred->parsed()) return cmd_predict(predict_family);
        if (cert->parsed()) return cmd_certify(certify_graph, certify_labeling, certify_variant);
        if (bnd->parsed()) return cmd_bounds(bounds_input, bounds_json);
        if (swp->parsed()) return cmd_sweep(graphs_n, trees_n, suite);
        if (red->parsed()) return cmd_reduce(reduce_input, reduce_k, reduce_verify);
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << " (best value found: " << e.incumbent.value
                  << ", not proven optimal)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
