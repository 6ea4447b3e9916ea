#pragma once

#include <utility>
#include <vector>

#include "mv/graph.hpp"

// Handcrafted instances used across the test suites. Each returns the graph
// and the matching the scenario is defined against.

namespace fixtures {

struct Instance {
    mv::Graph graph;
    mv::Matching matching;
};

inline mv::Matching make_matching(const mv::Graph& g,
                                  const std::vector<std::pair<int, int>>& pairs) {
    mv::Matching m(g.vertex_count());
    for (auto [u, v] : pairs) m.match(u, v);
    return m;
}

/// f1 - a = b - f2: one augmenting path of length 3.
/// ids: f1=0, a=1, b=2, f2=3.
inline Instance path4() {
    auto g = mv::Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    return {g, make_matching(g, {{1, 2}})};
}

/// Triangle with one free vertex: f=0, a=1, b=2, (a,b) matched.
/// The matched edge is a bridge of tenacity 3; petal {a,b}, bud f.
inline Instance triangle_blossom() {
    auto g = mv::Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    return {g, make_matching(g, {{1, 2}})};
}

/// Stalk plus 5-cycle: f=0, w=1, b=2, cycle b-c-d-e-g-b with (c,d),(e,g)
/// matched. ids: c=3, d=4, e=5, g=6. Every cycle edge has tenacity 9;
/// bridge (d,e) yields petal {c,d,e,g} with bud b.
inline Instance five_cycle() {
    auto g = mv::Graph::build(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    return {g, make_matching(g, {{1, 2}, {3, 4}, {5, 6}})};
}

/// five_cycle extended with a second free vertex and a chain to x, plus the
/// edge (x, c). The bridge (x, c) is discovered while evenlevel(c) is still
/// pending, exercising deferred bridge registration; its tenacity resolves to
/// 11 = l_m and the unique augmenting path opens the petal.
/// ids: five_cycle ids, then f2=7, y1=8, y2=9, y3=10, x=11.
inline Instance deferred_bridge() {
    auto g = mv::Graph::build(12, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 2},
                                   {7, 8},
                                   {8, 9},
                                   {9, 10},
                                   {10, 11},
                                   {11, 3}});
    return {g, make_matching(g, {{1, 2}, {3, 4}, {5, 6}, {8, 9}, {10, 11}})};
}

/// Double blossom: the 5-cycle blossom of tenacity 9 nested inside a
/// tenacity-11 blossom whose eight vertices include the inner bud b.
/// ids: f=0, w=1, b=2, c=3, d=4, e=5, g=6, m1..m6 = 7..12.
/// The matched edge (m5,m6) is the tenacity-11 bridge; its petal has bud f,
/// so bud* of the inner blossom's members is lifted from b to f.
inline Instance nested_blossoms() {
    auto g = mv::Graph::build(13, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 2},
                                   {0, 7},
                                   {7, 8},
                                   {8, 9},
                                   {9, 10},
                                   {10, 11},
                                   {11, 12},
                                   {5, 12}});
    return {g, make_matching(g, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}})};
}

/// Two free vertices both adjacent to both ends of a matched edge; l_m = 3
/// and the tenacity-3 vertices have no base (the base set is not a
/// singleton). ids: f1=0, f2=1, u=2, v=3.
inline Instance no_base() {
    auto g = mv::Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return {g, make_matching(g, {{2, 3}})};
}

/// Four free vertices, two disjoint edges: both augmenting paths of length 1
/// must be found in a single phase.
inline Instance two_disjoint_paths() {
    auto g = mv::Graph::build(4, {{0, 1}, {2, 3}});
    return {g, mv::Matching(4)};
}

/// Stalk, 5-cycle blossom, and a long tail from the blossom's base b to a
/// second free vertex. The only augmenting path (length 11) passes through b
/// but avoids the blossom; the removal cascade must still erase the whole
/// blossom. ids: five_cycle ids, then z1..z8 = 7..14, f2 = 15.
inline Instance blossom_cascade() {
    auto g = mv::Graph::build(16, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 2},
                                   {2, 7},
                                   {7, 8},
                                   {8, 9},
                                   {9, 10},
                                   {10, 11},
                                   {11, 12},
                                   {12, 13},
                                   {13, 14},
                                   {14, 15}});
    return {g,
            make_matching(g, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}})};
}

/// Two nested openings on one augmenting path: pentagon-1 (tenacity 9, bud
/// b) hangs off the stalk; a second two-petal blossom (tenacity 21, bud r2)
/// hangs off pentagon-1's maxlevel side via r1, and a long chain to a second
/// free vertex meets it at a tenacity-23 bridge. Extracting the unique
/// minimum augmenting path (length 23) must open the tenacity-21 petal and,
/// inside its tree descent, pentagon-1 as well.
/// ids: f=0 w=1 b=2 c=3 d=4 e=5 g=6 r1=7 r2=8 a1=9 a2=10 b1=11 b2=12
///      f2=13 h1..h10=14..23.
inline Instance double_opening() {
    auto g = mv::Graph::build(24, {{0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},  {5, 6},
                                   {6, 2},   {3, 7},   {7, 8},   {8, 9},   {8, 10}, {9, 11},
                                   {10, 12}, {11, 12}, {13, 14}, {14, 15}, {15, 16}, {16, 17},
                                   {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22}, {22, 23},
                                   {23, 9}});
    return {g, make_matching(g, {{1, 2},
                                 {3, 4},
                                 {5, 6},
                                 {7, 8},
                                 {9, 11},
                                 {10, 12},
                                 {14, 15},
                                 {16, 17},
                                 {18, 19},
                                 {20, 21},
                                 {22, 23}})};
}

inline mv::Graph petersen() {
    return mv::Graph::build(10, {{0, 1},
                                 {1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {4, 0},
                                 {0, 5},
                                 {1, 6},
                                 {2, 7},
                                 {3, 8},
                                 {4, 9},
                                 {5, 7},
                                 {7, 9},
                                 {9, 6},
                                 {6, 8},
                                 {8, 5}});
}

inline mv::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return mv::Graph::build(n, edges);
}

inline std::vector<Instance> all_structural_fixtures() {
    return {path4(),          triangle_blossom(), five_cycle(),       deferred_bridge(),
            nested_blossoms(), no_base(),          two_disjoint_paths()};
}

}  // namespace fixtures
