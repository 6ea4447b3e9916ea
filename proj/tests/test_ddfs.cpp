#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mv/ddfs.hpp"
#include "mv/petal_forest.hpp"
#include "test_util.hpp"

using namespace mv;

namespace {

LayeredGraph make_layered(std::vector<int> layers, int r, int g,
                          std::vector<std::pair<int, int>> arcs) {
    LayeredGraph h;
    h.layer = std::move(layers);
    h.red_root = r;
    h.green_root = g;
    h.arcs.resize(h.layer.size());
    for (auto [from, to] : arcs) h.arcs[from].push_back(to);
    return h;
}

// Cross-checks one DDFS run against the brute-force oracle and the outcome
// invariants; returns the outcome for further inspection.
DdfsOutcome check_against_oracle(const LayeredGraph& h) {
    auto outcome = ddfs_layered(h);
    auto expected = brute_bottleneck(h);
    if (expected.has_value()) {
        REQUIRE(outcome.kind == DdfsOutcome::Kind::bottleneck);
        CHECK(outcome.bottleneck == *expected);
        // Partition: red and green split the visits; the bottleneck is
        // stored once, outside both colors.
        for (const auto& visit : outcome.visits) {
            CHECK(visit.vertex != outcome.bottleneck);
            CHECK(visit.color != DdfsColor::none);
        }
        // Tree spanning: every visit's parent chain reaches its own root
        // through same-colored visits.
        for (const auto& visit : outcome.visits) {
            if (visit.parent < 0) continue;
            const DdfsVisit* parent = outcome.find(visit.parent);
            REQUIRE(parent != nullptr);
            CHECK(parent->color == visit.color);
        }
        CHECK(outcome.steps <= 2 * count_bottleneck_arcs(h, outcome.bottleneck));
    } else {
        REQUIRE(outcome.kind == DdfsOutcome::Kind::free_pair);
        CHECK(outcome.r0 != outcome.g0);
        CHECK(h.layer[outcome.r0] == 0);
        CHECK(h.layer[outcome.g0] == 0);
        // The two root-to-exit tree paths must be vertex-disjoint.
        std::set<int> red_path, green_path;
        for (int cur = outcome.r0; cur >= 0; cur = outcome.find(cur)->parent)
            red_path.insert(cur);
        for (int cur = outcome.g0; cur >= 0; cur = outcome.find(cur)->parent)
            green_path.insert(cur);
        std::vector<int> overlap;
        std::set_intersection(red_path.begin(), red_path.end(), green_path.begin(),
                              green_path.end(), std::back_inserter(overlap));
        CHECK(overlap.empty());
        CHECK(outcome.steps <= 2 * count_free_pair_arcs(h, outcome.r0, outcome.g0));
    }
    return outcome;
}

}  // namespace

TEST_CASE("single shared sink is the bottleneck") {
    // r and g one arc each into the same layer-0 vertex.
    auto h = make_layered({0, 1, 1}, 1, 2, {{1, 0}, {2, 0}});
    auto out = ddfs_layered(h);
    REQUIRE(out.kind == DdfsOutcome::Kind::bottleneck);
    CHECK(out.bottleneck == 0);
    CHECK(out.red_vertices() == std::vector<int>{1});
    CHECK(out.green_vertices() == std::vector<int>{2});
    CHECK(brute_bottleneck(h) == 0);
}

TEST_CASE("two disjoint chains give a free pair") {
    auto h = make_layered({0, 0, 1, 1}, 2, 3, {{2, 0}, {3, 1}});
    auto out = ddfs_layered(h);
    REQUIRE(out.kind == DdfsOutcome::Kind::free_pair);
    CHECK(out.r0 == 0);
    CHECK(out.g0 == 1);
    CHECK(!brute_bottleneck(h).has_value());
}

TEST_CASE("diamond: the sink is the highest bottleneck, not the shared midpoint") {
    // r->a, g->a, a->z, plus r->b, b->z with b below a: the bottleneck is z
    // because the red path through b avoids a.
    // ids: z=0, b=1, a=2, r=3, g=4; layers 0,1,2,3,3.
    auto h = make_layered({0, 1, 2, 3, 3}, 3, 4,
                          {{3, 2}, {4, 2}, {2, 0}, {3, 1}, {1, 0}});
    CHECK(brute_bottleneck(h) == 0);
    auto out = check_against_oracle(h);
    CHECK(out.bottleneck == 0);
}

TEST_CASE("malformed layered graphs are rejected") {
    SUBCASE("ascending arc") {
        auto h = make_layered({0, 1, 2, 2}, 2, 3, {{2, 1}, {3, 1}, {1, 0}, {0, 1}});
        CHECK_THROWS_AS(ddfs_layered(h), std::invalid_argument);
    }
    SUBCASE("vertex cannot reach layer 0") {
        auto h = make_layered({0, 1, 2, 2}, 2, 3, {{2, 1}, {3, 1}, {3, 0}});
        CHECK_THROWS_AS(ddfs_layered(h), std::invalid_argument);
    }
    SUBCASE("roots below the top layer") {
        auto h = make_layered({0, 1, 2}, 1, 2, {{1, 0}, {2, 0}, {2, 1}});
        CHECK_THROWS_AS(ddfs_layered(h), std::invalid_argument);
    }
}

TEST_CASE("random layered graphs agree with the brute-force oracle") {
    std::mt19937_64 rng(0xddf5);
    for (int trial = 0; trial < 600; ++trial)
        check_against_oracle(testutil::random_layered_graph(rng, 12, 40));
    // Tall thin graphs and short dense ones stress different meet patterns.
    for (int trial = 0; trial < 200; ++trial)
        check_against_oracle(testutil::random_layered_graph(rng, 18, 24, 1));
    for (int trial = 0; trial < 200; ++trial)
        check_against_oracle(testutil::random_layered_graph(rng, 5, 18, 6));
}

TEST_CASE("center-of-activity minimum never increases") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = testutil::random_layered_graph(rng, 10, 30);
        int min_seen = 1 << 30;
        bool violated = false;
        TraceSink sink = [&](const TraceEvent& ev) {
            if (ev.red_center_layer < 0 || ev.green_center_layer < 0) return;
            int current = std::min(ev.red_center_layer, ev.green_center_layer);
            if (current > min_seen) violated = true;
            min_seen = std::min(min_seen, current);
        };
        ddfs_layered(h, &sink);
        CHECK(!violated);
    }
}

TEST_CASE("trace reports the outcome events") {
    auto h = make_layered({0, 1, 1}, 1, 2, {{1, 0}, {2, 0}});
    std::vector<TraceEvent> events;
    TraceSink sink = [&](const TraceEvent& ev) { events.push_back(ev); };
    ddfs_layered(h, &sink);
    bool saw_bottleneck = false;
    for (const auto& ev : events)
        if (ev.kind == TraceEvent::Kind::bottleneck && ev.vertex == 0) saw_bottleneck = true;
    CHECK(saw_bottleneck);
}

TEST_CASE("on-graph form") {
    SUBCASE("triangle bridge bottlenecks at the free vertex") {
        auto [g, m] = fixtures::triangle_blossom();
        LevelState s = init_phase(g, m);
        run_min(g, m, s, 0);
        run_min(g, m, s, 1);
        PetalForest pf;
        pf.reset(g.vertex_count());
        int bridge = s.bucket(3).front();
        auto out = ddfs_on_graph(g, s, pf, bridge);
        REQUIRE(out.kind == DdfsOutcome::Kind::bottleneck);
        CHECK(out.bottleneck == 0);
        CHECK(out.red_vertices() == std::vector<int>{1});
        CHECK(out.green_vertices() == std::vector<int>{2});
    }
    SUBCASE("path bridge pairs the two free endpoints") {
        auto [g, m] = fixtures::path4();
        LevelState s = init_phase(g, m);
        run_min(g, m, s, 0);
        run_min(g, m, s, 1);
        PetalForest pf;
        pf.reset(g.vertex_count());
        int bridge = s.bucket(3).front();
        auto out = ddfs_on_graph(g, s, pf, bridge);
        REQUIRE(out.kind == DdfsOutcome::Kind::free_pair);
        CHECK(out.r0 == 0);
        CHECK(out.g0 == 3);
    }
    SUBCASE("bridge whose endpoints share a bud* has empty support") {
        // five_cycle plus the chord (c,g): both chord endpoints contract to
        // the petal bud b once the pentagon's petal exists.
        auto g = Graph::build(
            7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}, {3, 6}});
        auto m = fixtures::make_matching(g, {{1, 2}, {3, 4}, {5, 6}});
        LevelState s = init_phase(g, m);
        PetalForest pf;
        pf.reset(g.vertex_count());
        DdfsRunner runner;
        for (int level = 0; level <= 6; ++level) {
            run_min(g, m, s, level);
            run_max(g, m, s, pf, level, AugmentSink{}, runner);
        }
        // The chord became a bridge of tenacity 13 and was processed as an
        // empty-support no-op: only the pentagon petal exists.
        REQUIRE(pf.petals.size() == 1);
        CHECK(pf.petals[0].tenacity == 9);
        int chord = 7;
        CHECK(s.classification[chord] == EdgeState::bridge);
        auto out = ddfs_on_graph(g, s, pf, chord);
        CHECK(out.empty_support());
        CHECK(out.bottleneck == 2);
    }
}

TEST_CASE("brute-force path budget guard") {
    // Dense multi-layer graph with an exponential number of paths.
    std::mt19937_64 rng(5);
    LayeredGraph h;
    int layers = 16, per_layer = 3;
    for (int l = 0; l < layers; ++l)
        for (int k = 0; k < per_layer; ++k) h.layer.push_back(l);
    h.layer.push_back(layers);
    h.layer.push_back(layers);
    h.red_root = layers * per_layer;
    h.green_root = layers * per_layer + 1;
    h.arcs.resize(h.layer.size());
    for (int v = 0; v < static_cast<int>(h.layer.size()); ++v)
        for (int w = 0; w < layers * per_layer; ++w)
            if (h.layer[w] == h.layer[v] - 1) h.arcs[v].push_back(w);
    CHECK_THROWS_AS(brute_bottleneck(h, 1000), std::length_error);
}
