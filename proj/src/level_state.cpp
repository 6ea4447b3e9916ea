#include "mv/level_state.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mv {

namespace {

void ensure_size(std::vector<std::vector<int>>& buckets, size_t index) {
    if (buckets.size() <= index) buckets.resize(index + 1);
}

const std::vector<int> kEmptyBucket{};

}  // namespace

void LevelState::assign_level(int v, Level value) {
    Level& slot = (value % 2 == 0) ? evenlevel[v] : oddlevel[v];
    if (slot != kInfLevel)
        throw std::logic_error("level slot assigned twice in one phase");
    slot = value;
    ensure_size(level_buckets, static_cast<size_t>(value));
    level_buckets[value].push_back(v);
    ++unprocessed_level_entries;
}

const std::vector<int>& LevelState::bucket(Level tenacity) const {
    if (tenacity < 0 || static_cast<size_t>(tenacity) >= bridge_buckets.size())
        return kEmptyBucket;
    return bridge_buckets[tenacity];
}

LevelState init_phase(const Graph& g, const Matching& m) {
    if (auto violation = validate_matching(g, m))
        throw std::invalid_argument("init_phase: invalid matching: " + violation->message);
    LevelState s;
    s.n = g.vertex_count();
    s.evenlevel.assign(s.n, kInfLevel);
    s.oddlevel.assign(s.n, kInfLevel);
    s.predecessors.assign(s.n, {});
    s.successors.assign(s.n, {});
    s.alive_pred_count.assign(s.n, 0);
    s.alive.assign(s.n, true);
    s.scanned.assign(g.edge_count(), false);
    s.classification.assign(g.edge_count(), EdgeState::unscanned);
    s.matched_edge.assign(s.n, -1);
    s.pending_bridges.assign(s.n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (m.partner(u) == v) {
            s.matched_edge[u] = e;
            s.matched_edge[v] = e;
        }
    }
    for (int v = 0; v < s.n; ++v)
        if (!m.is_matched(v)) s.assign_level(v, 0);
    return s;
}

namespace {

void record_predecessor(LevelState& s, int from, int to) {
    s.predecessors[to].push_back(from);
    s.successors[from].push_back(to);
    ++s.alive_pred_count[to];
}

void place_bridge(LevelState& s, Level tenacity, int edge) {
    ensure_size(s.bridge_buckets, static_cast<size_t>(tenacity));
    s.bridge_buckets[tenacity].push_back(edge);
    ++s.unprocessed_bridges;
}

}  // namespace

BridgePlacement register_bridge(const Graph& g, const Matching& m, LevelState& s, int edge) {
    auto [u, v] = g.edge(edge);
    if (s.classification[edge] != EdgeState::bridge)
        throw std::logic_error("register_bridge on a non-bridge edge");
    if (m.partner(u) == v) {
        // Matched bridge: both endpoints were discovered as inner vertices at
        // the current search level, so both oddlevels are known minlevels.
        if (!level_finite(s.oddlevel[u]) || !level_finite(s.oddlevel[v]))
            throw std::logic_error("matched bridge with unknown oddlevel");
        place_bridge(s, s.oddlevel[u] + s.oddlevel[v] + 1, edge);
        return BridgePlacement::placed;
    }
    if (level_finite(s.evenlevel[u]) && level_finite(s.evenlevel[v])) {
        place_bridge(s, s.evenlevel[u] + s.evenlevel[v] + 1, edge);
        return BridgePlacement::placed;
    }
    int blocked = level_finite(s.evenlevel[u]) ? v : u;
    s.pending_bridges[blocked].push_back(edge);
    return BridgePlacement::deferred;
}

std::vector<int> resolve_pending(const Graph& g, const Matching& m, LevelState& s, int v) {
    std::vector<int> placed;
    if (s.pending_bridges[v].empty()) return placed;
    std::vector<int> waiting;
    waiting.swap(s.pending_bridges[v]);
    for (int e : waiting)
        if (register_bridge(g, m, s, e) == BridgePlacement::placed) placed.push_back(e);
    return placed;
}

std::vector<int> run_min(const Graph& g, const Matching& m, LevelState& s, int level) {
    std::vector<int> newly_assigned;
    if (level < 0 || static_cast<size_t>(level) >= s.level_buckets.size())
        return newly_assigned;
    std::vector<int> frontier = s.level_buckets[level];
    s.unprocessed_level_entries -= static_cast<long long>(frontier.size());
    std::sort(frontier.begin(), frontier.end());

    bool even_level = (level % 2 == 0);
    for (int u : frontier) {
        if (!s.alive[u]) continue;
        if (even_level) {
            for (const auto& end : g.adjacency(u)) {
                if (m.partner(u) == end.to) continue;  // the odd pass owns the matched edge
                if (s.instrument) ++s.min_edge_touches;
                if (s.scanned[end.edge]) continue;
                s.scanned[end.edge] = true;
                if (!s.alive[end.to]) continue;
                if (s.minlevel(end.to) >= level + 1) {
                    if (s.oddlevel[end.to] == kInfLevel) {
                        s.assign_level(end.to, level + 1);
                        newly_assigned.push_back(end.to);
                    }
                    record_predecessor(s, u, end.to);
                    s.classification[end.edge] = EdgeState::prop;
                } else {
                    s.classification[end.edge] = EdgeState::bridge;
                    register_bridge(g, m, s, end.edge);
                }
            }
        } else {
            int e = s.matched_edge[u];
            if (e < 0) continue;
            int to = g.other_end(e, u);
            if (s.instrument) ++s.min_edge_touches;
            if (s.scanned[e]) continue;
            s.scanned[e] = true;
            if (!s.alive[to]) continue;
            if (s.minlevel(to) >= level + 1) {
                s.assign_level(to, level + 1);
                newly_assigned.push_back(to);
                record_predecessor(s, u, to);
                s.classification[e] = EdgeState::prop;
            } else {
                s.classification[e] = EdgeState::bridge;
                register_bridge(g, m, s, e);
            }
        }
    }
    return newly_assigned;
}

bool phase_done(const LevelState& s, int level) {
    (void)level;
    return s.unprocessed_level_entries == 0 && s.unprocessed_bridges == 0;
}

void level_dump(const LevelState& s, std::ostream& out) {
    auto name = [](Level x) { return level_finite(x) ? std::to_string(x) : std::string("inf"); };
    for (int v = 0; v < s.n; ++v)
        out << v << ' ' << name(s.evenlevel[v]) << ' ' << name(s.oddlevel[v]) << ' '
            << name(s.tenacity(v)) << '\n';
}

void bridge_dump(const Graph& g, const LevelState& s, std::ostream& out) {
    for (size_t t = 0; t < s.bridge_buckets.size(); ++t)
        for (int e : s.bridge_buckets[t]) {
            auto [u, v] = g.edge(e);
            out << "bucket " << t << ' ' << u << ' ' << v << '\n';
        }
}

}  // namespace mv
