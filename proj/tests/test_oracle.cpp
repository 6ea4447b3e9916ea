#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mv/oracle.hpp"

using namespace mv;
using namespace mv::oracle;

namespace {

int edge_id(const Graph& g, int u, int v) {
    for (const auto& e : g.adjacency(u))
        if (e.to == v) return e.edge;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("levels: single free edge") {
    auto g = Graph::build(2, {{0, 1}});
    auto p = enumerate_levels(g, Matching(2));
    CHECK(p.evenlevel == std::vector<Level>{0, 0});
    CHECK(p.oddlevel == std::vector<Level>{1, 1});
    CHECK(p.l_m == 1);
}

TEST_CASE("levels: path fixture") {
    auto [g, m] = fixtures::path4();
    auto p = enumerate_levels(g, m);
    CHECK(p.evenlevel == std::vector<Level>{0, 2, 2, 0});
    CHECK(p.oddlevel == std::vector<Level>{3, 1, 1, 3});
    CHECK(p.l_m == 3);
}

TEST_CASE("levels: triangle blossom has no augmenting path") {
    auto [g, m] = fixtures::triangle_blossom();
    auto p = enumerate_levels(g, m);
    CHECK(p.evenlevel == std::vector<Level>{0, 2, 2});
    CHECK(p.oddlevel == std::vector<Level>{kInfLevel, 1, 1});
    CHECK(p.l_m == kInfLevel);
    CHECK(p.tenacity(1) == 3);
    CHECK(p.tenacity(2) == 3);
}

TEST_CASE("levels and edge tenacities: five-cycle fixture") {
    auto [g, m] = fixtures::five_cycle();
    auto p = full_profile(g, m);
    CHECK(p.evenlevel == std::vector<Level>{0, kInfLevel, 2, 6, 4, 4, 6});
    CHECK(p.oddlevel == std::vector<Level>{kInfLevel, 1, kInfLevel, 3, 5, 5, 3});
    CHECK(p.l_m == kInfLevel);
    // Every edge of the 5-cycle has tenacity 9; the stalk edges are infinite.
    for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}})
        CHECK(p.edge_tenacity[edge_id(g, u, v)] == 9);
    CHECK(p.edge_tenacity[edge_id(g, 0, 1)] == kInfLevel);
    CHECK(p.edge_tenacity[edge_id(g, 1, 2)] == kInfLevel);

    // (d,e) is the single bridge; everything else is a prop.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == edge_id(g, 4, 5))
            CHECK(p.edge_class[e] == EdgeClass::bridge);
        else
            CHECK(p.edge_class[e] == EdgeClass::prop);
    }
    CHECK(p.bridge_support[edge_id(g, 4, 5)] == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("bases: five-cycle vertices are based at b") {
    auto [g, m] = fixtures::five_cycle();
    auto p = full_profile(g, m);
    CHECK(p.base_violations.empty());
    for (int v : {3, 4, 5, 6}) CHECK(p.base[v] == 2);
    CHECK(p.base[1] == -1);  // infinite tenacity, no base
    SUBCASE("iterated base chain ends at the base") {
        CHECK(p.base_chain(3) == std::vector<int>{2});
    }
}

TEST_CASE("bases: no-base counterexample") {
    auto [g, m] = fixtures::no_base();
    auto p = full_profile(g, m);
    CHECK(p.l_m == 3);
    for (int v = 0; v < 4; ++v) CHECK(p.tenacity(v) == 3);
    // Tenacity equals l_m, so no base is defined and no violation is raised.
    for (int v = 0; v < 4; ++v) CHECK(p.base[v] == -1);
    CHECK(p.base_violations.empty());
    // The F-sets themselves are degenerate (no higher-tenacity vertex exists).
    CHECK(p.f_sets[2].size() == 1);
    CHECK(p.f_sets[2][0] == -1);
    // The matched edge is a bridge of tenacity 3 with support {u, v}.
    int e = edge_id(g, 2, 3);
    CHECK(p.edge_class[e] == EdgeClass::bridge);
    CHECK(p.edge_tenacity[e] == 3);
    CHECK(p.bridge_support[e] == std::vector<int>{2, 3});
}

TEST_CASE("path fixture: bridge support") {
    auto [g, m] = fixtures::path4();
    auto p = full_profile(g, m);
    int e = edge_id(g, 1, 2);
    CHECK(p.edge_class[e] == EdgeClass::bridge);
    CHECK(p.edge_tenacity[e] == 3);
    CHECK(p.bridge_support[e] == std::vector<int>{1, 2});
    CHECK(p.edge_class[edge_id(g, 0, 1)] == EdgeClass::prop);
    CHECK(p.edge_class[edge_id(g, 2, 3)] == EdgeClass::prop);
}

TEST_CASE("blossoms: five-cycle builds a single depth-1 blossom") {
    auto [g, m] = fixtures::five_cycle();
    auto p = full_profile(g, m);
    REQUIRE(p.blossoms.size() == 1);
    CHECK(p.blossoms[0].base == 2);
    CHECK(p.blossoms[0].tenacity == 9);
    CHECK(p.blossoms[0].members == std::vector<int>{3, 4, 5, 6});
    CHECK(p.blossoms[0].members_alt == p.blossoms[0].members);
    CHECK(p.blossoms[0].depth == 1);
}

TEST_CASE("blossoms: nested fixture nests tenacity 9 inside tenacity 11") {
    auto [g, m] = fixtures::nested_blossoms();
    auto p = full_profile(g, m);
    CHECK(p.l_m == kInfLevel);
    // Frozen levels for the eight tenacity-11 vertices.
    CHECK(p.evenlevel[1] == 10);  // w
    CHECK(p.oddlevel[2] == 9);    // b
    CHECK(p.evenlevel[7] == 10);  // m1
    CHECK(p.oddlevel[12] == 5);   // m6
    REQUIRE(p.blossoms.size() == 2);
    const auto& inner = p.blossoms[0].tenacity == 9 ? p.blossoms[0] : p.blossoms[1];
    const auto& outer = p.blossoms[0].tenacity == 9 ? p.blossoms[1] : p.blossoms[0];
    CHECK(inner.base == 2);
    CHECK(inner.members == std::vector<int>{3, 4, 5, 6});
    CHECK(inner.depth == 1);
    CHECK(outer.base == 0);
    CHECK(outer.tenacity == 11);
    CHECK(outer.members == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(outer.depth == 2);
    CHECK(outer.members_alt == outer.members);
    // The matched edge (m5,m6) is the tenacity-11 bridge; support includes b.
    int e = edge_id(g, 11, 12);
    CHECK(p.edge_class[e] == EdgeClass::bridge);
    CHECK(p.edge_tenacity[e] == 11);
    CHECK(p.bridge_support[e] == std::vector<int>{1, 2, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("deferred-bridge fixture: unmatched bridge of tenacity l_m") {
    auto [g, m] = fixtures::deferred_bridge();
    auto p = full_profile(g, m);
    CHECK(p.l_m == 11);
    CHECK(p.evenlevel[11] == 4);  // x
    CHECK(p.evenlevel[3] == 6);   // c
    int e = edge_id(g, 11, 3);
    CHECK(p.edge_class[e] == EdgeClass::bridge);
    CHECK(p.edge_tenacity[e] == 11);
    CHECK(p.bridge_support[e] == std::vector<int>{1, 2, 8, 9, 10, 11});
    // The cycle blossom is unchanged by the extension.
    REQUIRE(p.blossoms.size() == 1);
    CHECK(p.blossoms[0].members == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("base chains terminate at an unmatched vertex when one is reachable") {
    auto [g, m] = fixtures::nested_blossoms();
    auto p = full_profile(g, m);
    // m6 -> f directly; the inner-blossom members climb b then f.
    CHECK(p.base_chain(12) == std::vector<int>{0});
    CHECK(p.base_chain(3) == std::vector<int>{2, 0});
    CHECK(p.all_bases_defined(12, m));
    CHECK(p.all_bases_defined(3, m));
}

TEST_CASE("trees with at most one free vertex have no finite-tenacity bridge") {
    std::mt19937_64 rng(0x7ee5);
    for (int trial = 0; trial < 50; ++trial) {
        // Build a tree out of matched pairs hung on random existing vertices;
        // the seed vertex is the single free one.
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> pairs;
        int n = 1;
        int pair_count = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < pair_count; ++k) {
            int anchor = static_cast<int>(rng() % n);
            int a = n++, b = n++;
            edges.emplace_back(anchor, a);
            edges.emplace_back(a, b);
            pairs.emplace_back(a, b);
        }
        Graph g = Graph::build(n, edges);
        Matching m = fixtures::make_matching(g, pairs);
        auto p = full_profile(g, m);
        CHECK(p.l_m == kInfLevel);
        for (int e = 0; e < g.edge_count(); ++e)
            if (p.edge_class[e] == EdgeClass::bridge) CHECK(p.edge_tenacity[e] == kInfLevel);
    }
}

TEST_CASE("structure checks pass on all fixtures") {
    for (const auto& instance : fixtures::all_structural_fixtures()) {
        auto p = full_profile(instance.graph, instance.matching);
        auto report = check_structure(p, instance.graph, instance.matching);
        for (const auto& f : report.failures) FAIL_CHECK(f);
        CHECK(report.ok());
    }
}

TEST_CASE("structure checks pass on random instances") {
    std::mt19937_64 rng(3123);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        int max_m = n * (n - 1) / 2;
        int edges = static_cast<int>(rng() % (max_m + 1));
        Graph g = random_graph(n, edges, rng);
        Matching m = random_maximal_matching(g, rng);
        auto p = full_profile(g, m);
        auto report = check_structure(p, g, m);
        if (!report.ok()) {
            std::ostringstream os;
            serialize_edge_list(g, os);
            FAIL_CHECK("structure failure on trial " << trial << "\n"
                                                     << os.str() << report.failures.front());
        }
    }
}

TEST_CASE("corrupted profile is caught (negative control)") {
    auto [g, m] = fixtures::five_cycle();
    auto p = full_profile(g, m);
    p.oddlevel[4] = 7;  // true value is 5
    auto report = check_structure(p, g, m);
    CHECK(!report.ok());
}

TEST_CASE("max_matching_exhaustive ground truths") {
    CHECK(max_matching_exhaustive(Graph::build(0, {})) == 0);
    CHECK(max_matching_exhaustive(fixtures::cycle(4)) == 2);
    CHECK(max_matching_exhaustive(fixtures::cycle(5)) == 2);
    CHECK(max_matching_exhaustive(fixtures::petersen()) == 5);
    CHECK_THROWS_AS(max_matching_exhaustive(fixtures::petersen(), 5), limit_error);
}

TEST_CASE("blossom reference matcher agrees with exhaustive search") {
    CHECK(blossom_reference_matching(fixtures::petersen()) == 5);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 13);
        int max_m = n * (n - 1) / 2;
        int edges = static_cast<int>(rng() % (max_m + 1));
        Graph g = random_graph(n, edges, rng);
        CHECK(blossom_reference_matching(g) == max_matching_exhaustive(g));
    }
}

TEST_CASE("minimum augmenting path enumeration") {
    auto [g, m] = fixtures::path4();
    auto paths = enumerate_min_augmenting_paths(g, m);
    REQUIRE(!paths.empty());
    for (const auto& p : paths) {
        CHECK(p.length() == 3);
        CHECK(is_augmenting(g, m, p));
    }
    auto [g2, m2] = fixtures::triangle_blossom();
    CHECK(enumerate_min_augmenting_paths(g2, m2).empty());
}

TEST_CASE("oracle size guard") {
    std::mt19937_64 rng(1);
    Graph g = random_graph(20, 10, rng);
    CHECK_THROWS_AS(enumerate_levels(g, Matching(20)), limit_error);
}

TEST_CASE("profile dump format") {
    auto [g, m] = fixtures::path4();
    auto p = full_profile(g, m);
    std::ostringstream out;
    profile_dump(p, out);
    CHECK(out.str() == "0 0 3 3\n1 2 1 3\n2 2 1 3\n3 0 3 3\n");
}
