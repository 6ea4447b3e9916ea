#include "mv/augmenter.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mv {

namespace {

// Shared machinery for turning DDFS trees and petal records back into
// concrete alternating paths. All helpers return vertex sequences that
// include both endpoints; join() glues them at the shared junction.

struct PathWeaver {
    const Graph& g;
    const Matching& m;
    const LevelState& s;
    const PetalForest& pf;
    int budget;  // appended vertices; trips on runaway recursion

    void spend(int amount = 1) {
        budget -= amount;
        if (budget < 0) throw std::logic_error("path expansion exceeded the vertex budget");
    }

    static void join(std::vector<int>& out, const std::vector<int>& piece) {
        if (out.empty()) {
            out = piece;
            return;
        }
        if (piece.empty() || out.back() != piece.front())
            throw std::logic_error("path pieces do not share a junction vertex");
        out.insert(out.end(), piece.begin() + 1, piece.end());
    }

    static std::vector<int> reversed(std::vector<int> p) {
        std::reverse(p.begin(), p.end());
        return p;
    }

    int first_alive_predecessor(int v) const {
        for (int p : s.predecessors[v])
            if (s.alive[p]) return p;
        throw std::logic_error("no alive predecessor while expanding a path");
    }

    // Path from v, entered at level `entry_level` (one of v's two levels),
    // down to waypoint b entered at its minlevel.
    std::vector<int> walk_down(int v, Level entry_level, int b) {
        std::vector<int> out{v};
        spend();
        int cur = v;
        Level at = entry_level;
        while (cur != b) {
            if (at != s.minlevel(cur)) {
                if (at != s.maxlevel(cur))
                    throw std::logic_error("walk entered a vertex at a foreign level");
                join(out, open_through_bridge(cur));
                cur = out.back();
                at = s.minlevel(cur);
                continue;
            }
            int p = first_alive_predecessor(cur);
            out.push_back(p);
            spend();
            --at;
            cur = p;
        }
        return out;
    }

    // Expands one contracted tree edge: parent w reached raw predecessor x,
    // whose petal chain ends at the tree child y. The concrete segment is
    // the prop edge (w,x) followed by the opened chain x..y.
    std::vector<int> expand_hop(int parent, int entry, int child) {
        if (!g.has_edge(parent, entry))
            throw std::logic_error("tree hop is not backed by a graph edge");
        std::vector<int> out{parent};
        spend();
        auto chain = walk_down(entry, s.minlevel(parent) - 1, child);
        out.insert(out.end(), chain.begin(), chain.end());
        return out;
    }

    struct Hop {
        int parent;
        int entry;
        int child;
    };

    // Expanded root-to-target path along a parent map.
    template <class ParentOf, class EntryOf>
    std::vector<int> descend_tree(int root, int target, ParentOf&& parent_of,
                                  EntryOf&& entry_of) {
        std::vector<Hop> hops;
        int cur = target;
        while (cur != root) {
            int par = parent_of(cur);
            if (par < 0) throw std::logic_error("tree walk escaped its root");
            hops.push_back({par, entry_of(cur), cur});
            cur = par;
        }
        std::vector<int> out{root};
        spend();
        for (auto it = hops.rbegin(); it != hops.rend(); ++it)
            join(out, expand_hop(it->parent, it->entry, it->child));
        return out;
    }

    // Inner-entry opening: from petal member v (entered at its maxlevel)
    // through the petal's bridge down to the petal's bud.
    std::vector<int> open_through_bridge(int v) {
        int petal_id = pf.petal_of[v];
        if (petal_id < 0)
            throw std::logic_error("maxlevel entry into a vertex outside any petal");
        const Petal& petal = pf.petal(petal_id);
        bool red_side = pf.color[v] == DdfsColor::red;
        int same_end = red_side ? petal.bridge_red : petal.bridge_green;
        int same_root = red_side ? petal.red_root : petal.green_root;
        int opp_end = red_side ? petal.bridge_green : petal.bridge_red;
        int opp_root = red_side ? petal.green_root : petal.red_root;
        bool matched_bridge = m.partner(petal.bridge_red) == petal.bridge_green;
        Level same_level = matched_bridge ? s.oddlevel[same_end] : s.evenlevel[same_end];
        Level opp_level = matched_bridge ? s.oddlevel[opp_end] : s.evenlevel[opp_end];

        auto member_parent = [&](int w) { return pf.ddfs_parent[w]; };
        auto member_entry = [&](int w) { return pf.ddfs_entry[w]; };
        auto bud_parent = [&](int w) {
            if (w == petal.bud)
                return red_side ? petal.bud_green_parent : petal.bud_red_parent;
            return pf.ddfs_parent[w];
        };
        auto bud_entry = [&](int w) {
            if (w == petal.bud) return red_side ? petal.bud_green_entry : petal.bud_red_entry;
            return pf.ddfs_entry[w];
        };

        std::vector<int> out =
            reversed(descend_tree(same_root, v, member_parent, member_entry));
        join(out, reversed(walk_down(same_end, same_level, same_root)));
        if (!g.has_edge(same_end, opp_end))
            throw std::logic_error("petal bridge is not a graph edge");
        out.push_back(opp_end);
        spend();
        join(out, walk_down(opp_end, opp_level, opp_root));
        join(out, descend_tree(opp_root, petal.bud, bud_parent, bud_entry));
        return out;
    }
};

AlternatingPath to_alternating_path(const Matching& m, const std::vector<int>& vertices) {
    AlternatingPath p;
    p.vertices = vertices;
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        p.matched.push_back(m.partner(vertices[i]) == vertices[i + 1]);
    return p;
}

}  // namespace

AlternatingPath open_petal(const Graph& g, const Matching& m, const LevelState& s,
                           const PetalForest& pf, int v, int b) {
    PathWeaver weaver{g, m, s, pf, 4 * std::max(1, g.vertex_count()) + 8};
    std::vector<int> vertices =
        v == b ? std::vector<int>{v} : weaver.walk_down(v, s.evenlevel[v], b);
    return to_alternating_path(m, vertices);
}

AlternatingPath extract_path(const Graph& g, const Matching& m, const LevelState& s,
                             const PetalForest& pf, int bridge_edge, const DdfsOutcome& outcome) {
    if (outcome.kind != DdfsOutcome::Kind::free_pair)
        throw std::logic_error("extract_path needs a free-pair outcome");
    auto [u, v] = g.edge(bridge_edge);
    bool matched_bridge = m.partner(u) == v;
    Level level_u = matched_bridge ? s.oddlevel[u] : s.evenlevel[u];
    Level level_v = matched_bridge ? s.oddlevel[v] : s.evenlevel[v];

    PathWeaver weaver{g, m, s, pf, 4 * std::max(1, g.vertex_count()) + 8};
    auto tree_parent = [&](int w) {
        const DdfsVisit* visit = outcome.find(w);
        return visit ? visit->parent : -1;
    };
    auto tree_entry = [&](int w) {
        const DdfsVisit* visit = outcome.find(w);
        return visit ? visit->entry : -1;
    };
    auto root_of = [&](int leaf) {
        int cur = leaf;
        while (tree_parent(cur) >= 0) cur = tree_parent(cur);
        return cur;
    };

    int red_root = root_of(outcome.r0);
    int green_root = root_of(outcome.g0);

    std::vector<int> red_half = weaver.walk_down(u, level_u, red_root);
    PathWeaver::join(red_half, weaver.descend_tree(red_root, outcome.r0, tree_parent, tree_entry));
    std::vector<int> green_half = weaver.walk_down(v, level_v, green_root);
    PathWeaver::join(green_half,
                     weaver.descend_tree(green_root, outcome.g0, tree_parent, tree_entry));

    std::vector<int> full = PathWeaver::reversed(red_half);
    full.insert(full.end(), green_half.begin(), green_half.end());

    AlternatingPath path = to_alternating_path(m, full);
    if (!is_valid_alternating_path(g, m, path))
        throw std::logic_error("extracted path is not a simple alternating path");
    if (path.length() != level_u + level_v + 1)
        throw std::logic_error("extracted path has the wrong length");
    return path;
}

std::vector<int> augment_and_cascade(const Graph& g, Matching& m, LevelState& s,
                                     const AlternatingPath& p) {
    if (!is_augmenting(g, m, p))
        throw std::invalid_argument("augment_and_cascade: path is not augmenting");
    augment(m, p);
    std::vector<int> removed;
    std::deque<int> work;
    auto kill = [&](int v) {
        if (!s.alive[v]) return;
        s.alive[v] = false;
        removed.push_back(v);
        work.push_back(v);
    };
    for (int v : p.vertices) kill(v);
    while (!work.empty()) {
        int u = work.front();
        work.pop_front();
        for (int w : s.successors[u]) {
            if (--s.alive_pred_count[w] == 0 && s.alive[w]) {
                Level ml = s.minlevel(w);
                if (level_finite(ml) && ml > 0) kill(w);
            }
        }
    }
    return removed;
}

namespace {

PhaseStats drive_phase(const Graph& g, Matching& m, LevelState& s, PetalForest& pf,
                       DdfsRunner& runner, const PhaseConfig& config, bool augment_mode,
                       const TraceSink* trace) {
    const Matching phase_matching = m;  // the level structure is relative to this
    s = init_phase(g, phase_matching);
    s.instrument = config.instrument;
    pf.reset(g.vertex_count());
    PhaseStats stats;
    int max_level = config.max_search_level >= 0 ? config.max_search_level : g.vertex_count();

    for (int level = 0; level <= max_level; ++level) {
        stats.search_levels = level + 1;
        run_min(g, phase_matching, s, level);
        bool augmented_here = false;
        AugmentSink sink;
        if (augment_mode) {
            sink = [&](int bridge_edge, const DdfsOutcome& outcome) {
                AlternatingPath path =
                    extract_path(g, phase_matching, s, pf, bridge_edge, outcome);
                augment_and_cascade(g, m, s, path);
                ++stats.paths_found;
                stats.l_m = 2 * level + 1;
                augmented_here = true;
            };
        } else {
            sink = [&](int bridge_edge, const DdfsOutcome& outcome) {
                stats.l_m = level_min(stats.l_m, 2 * level + 1);
                record_free_pair_levels(g, phase_matching, s, pf, bridge_edge, outcome);
            };
        }
        run_max(g, phase_matching, s, pf, level, sink, runner, &stats.ddfs_steps, trace);
        if (augment_mode && augmented_here) break;  // bucket B(l_m) is exhausted
        if (phase_done(s, level)) break;
    }
    stats.min_edge_touches = s.min_edge_touches;
    stats.petals = static_cast<int>(pf.petals.size());
    return stats;
}

}  // namespace

std::pair<Matching, PhaseStats> run_phase(const Graph& g, const Matching& m,
                                          const PhaseConfig& config, const TraceSink* trace) {
    Matching out = m;
    LevelState s;
    PetalForest pf;
    DdfsRunner runner;
    PhaseStats stats = drive_phase(g, out, s, pf, runner, config, true, trace);
    return {std::move(out), stats};
}

MatchingResult maximum_matching(const Graph& g, const Matching& initial,
                                const PhaseConfig& config, const TraceSink* trace) {
    MatchingResult result;
    result.matching = initial;
    LevelState s;
    PetalForest pf;
    DdfsRunner runner;
    while (true) {
        PhaseStats stats = drive_phase(g, result.matching, s, pf, runner, config, true, trace);
        result.phases.push_back(stats);
        if (stats.paths_found == 0) break;
    }
    return result;
}

MatchingResult maximum_matching(const Graph& g, const PhaseConfig& config,
                                const TraceSink* trace) {
    return maximum_matching(g, Matching(g.vertex_count()), config, trace);
}

PhaseAnalysis analyze_phase(const Graph& g, const Matching& m, const PhaseConfig& config,
                            const TraceSink* trace) {
    PhaseAnalysis analysis;
    Matching copy = m;
    DdfsRunner runner;
    analysis.stats =
        drive_phase(g, copy, analysis.state, analysis.forest, runner, config, false, trace);
    return analysis;
}

}  // namespace mv
