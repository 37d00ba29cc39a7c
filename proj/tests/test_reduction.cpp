#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rdrd/families.hpp"
#include "rdrd/reduction.hpp"

using namespace rdrd;

TEST_CASE("host construction for P_3") {
    Graph p3 = generate({FamilyKind::Path, {3}});
    ReductionInstance inst = build_reduction(p3);
    CHECK(inst.m_param == 13);
    CHECK(inst.host.n == 13 + 1 + 3 + 13 * 2);
    CHECK_NOTHROW(verify_structure(inst));

    CHECK(inst.roles[0].role == HostRole::XCycle);
    CHECK(inst.roles[inst.hub()].role == HostRole::Hub);
    CHECK(inst.roles[inst.host_id_of_source(2)].index == 2);
    CHECK(inst.roles[inst.host.n - 1].role == HostRole::EdgeGadget);
    CHECK(inst.roles[inst.host.n - 1].edge == 1);

    // hub sees the whole x-cycle and every source vertex, nothing else
    CHECK(inst.host.degree(inst.hub()) == inst.m_param + 3);
    // gadget vertices see their cycle neighbors plus both edge endpoints
    int gadget = inst.m_param + 1 + 3;  // first vertex of the first edge gadget
    CHECK(inst.host.has_edge(gadget, inst.host_id_of_source(0)));
    CHECK(inst.host.has_edge(gadget, inst.host_id_of_source(1)));
    CHECK(!inst.host.has_edge(gadget, inst.host_id_of_source(2)));
}

TEST_CASE("structure verification catches a tampered host") {
    Graph p3 = generate({FamilyKind::Path, {3}});
    ReductionInstance inst = build_reduction(p3);
    auto edges = inst.host.edges;
    edges.erase(std::find(edges.begin(), edges.end(), std::pair{0, 1}));
    inst.host = new_graph(inst.host.n, std::move(edges));
    CHECK_THROWS_WITH_AS(verify_structure(inst), doctest::Contains("host structure"),
                         std::runtime_error);
}

TEST_CASE("covers map to valid labelings of weight 3|C| + 3") {
    for (int n = 2; n <= 4; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            ReductionInstance inst = build_reduction(g);
            auto cover = oracles::brute_force_cover(g);
            Labeling l = cover_to_labeling(inst, cover);
            CHECK(weight(l) == 3 * static_cast<int>(cover.size()) + 3);
            CAPTURE(serialize_edge_list(g));
            CHECK(is_valid(inst.host, l, Variant::RDRD).valid);
            // and back again
            CHECK(labeling_to_cover(inst, l, static_cast<int>(cover.size())) == cover);
        });
    }
}

TEST_CASE("cover_to_labeling rejects non-covers") {
    Graph p3 = generate({FamilyKind::Path, {3}});
    ReductionInstance inst = build_reduction(p3);
    CHECK_THROWS_WITH_AS(cover_to_labeling(inst, {0}), doctest::Contains("cover"),
                         std::invalid_argument);
    CHECK_THROWS_AS(cover_to_labeling(inst, {5}), std::invalid_argument);
}

TEST_CASE("the isolated-vertex corner: the K_1 host needs weight 4, not 3") {
    Graph k1 = new_graph(1, {});
    ReductionInstance inst = build_reduction(k1);
    REQUIRE(inst.host.n == 9);  // 7-cycle + hub + source vertex
    CHECK_NOTHROW(verify_structure(inst));

    // the weight-3 candidate from the empty cover is not a valid labeling:
    // the source vertex's only neighbor is the hub, so it has no 0-neighbor
    Labeling l = cover_to_labeling(inst, {});
    CHECK(weight(l) == 3);
    auto rep = is_valid(inst.host, l, Variant::RDRD);
    CHECK(!rep.valid);
    CHECK(rep.violations[0].vertex == inst.host_id_of_source(0));

    // exhaustive scan over all 4^9 labelings confirms the true optimum
    auto brute = oracles::brute_force(inst.host, Variant::RDRD);
    CHECK(brute.value == 4);
    CHECK(solve(inst.host, Variant::RDRD).value == 4);
}

TEST_CASE("equivalence holds for sources with no isolated vertex") {
    Graph k2 = generate({FamilyKind::Path, {2}});
    CHECK(verify_equivalence(k2, 1));   // cover {0} <-> host value 6
    CHECK(verify_equivalence(k2, 0));   // no empty cover <-> host value > 3

    ReductionInstance inst = build_reduction(k2);
    SolveOptions opts;
    opts.seed = cover_to_labeling(inst, {0});
    CHECK(solve(inst.host, Variant::RDRD, opts).value == 6);

    Graph p3 = generate({FamilyKind::Path, {3}});
    CHECK(verify_equivalence(p3, 1));
    Graph k3 = generate({FamilyKind::Complete, {3}});
    CHECK(verify_equivalence(k3, 2));
}
