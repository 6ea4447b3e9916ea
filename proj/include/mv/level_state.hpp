#pragma once

#include <iosfwd>
#include <vector>

#include "mv/graph.hpp"
#include "mv/levels.hpp"

namespace mv {

struct PhaseConfig {
    int max_search_level = -1;  // < 0 means vertex count
    bool instrument = true;     // keep edge-touch counters
};

enum class EdgeState : unsigned char { unscanned, prop, bridge };

/// Per-phase search state: the alternating-BFS levels, predecessor lists,
/// edge classification, bridge buckets indexed by tenacity, and liveness
/// flags maintained by the removal cascade.
struct LevelState {
    int n = 0;
    bool instrument = true;  // maintain the edge-touch counter
    std::vector<Level> evenlevel;
    std::vector<Level> oddlevel;
    std::vector<std::vector<int>> predecessors;
    std::vector<std::vector<int>> successors;  // inverse predecessor adjacency
    std::vector<int> alive_pred_count;
    std::vector<char> alive;

    std::vector<char> scanned;               // per edge
    std::vector<EdgeState> classification;   // per edge
    std::vector<int> matched_edge;           // per vertex, edge id to partner or -1

    std::vector<std::vector<int>> bridge_buckets;   // indexed by tenacity
    std::vector<std::vector<int>> pending_bridges;  // per vertex, bridges awaiting its evenlevel
    std::vector<std::vector<int>> level_buckets;    // indexed by level value

    // Work accounting and termination bookkeeping.
    long long min_edge_touches = 0;
    long long unprocessed_level_entries = 0;
    long long unprocessed_bridges = 0;

    Level minlevel(int v) const { return level_min(evenlevel[v], oddlevel[v]); }
    Level maxlevel(int v) const { return level_max(evenlevel[v], oddlevel[v]); }
    Level tenacity(int v) const { return level_add(evenlevel[v], oddlevel[v]); }
    bool outer(int v) const { return evenlevel[v] < oddlevel[v]; }

    /// Writes `value` into the even or odd slot by parity, enqueues the
    /// vertex on the matching level bucket, and updates the counters.
    void assign_level(int v, Level value);

    const std::vector<int>& bucket(Level tenacity) const;
};

/// Fresh per-phase state: evenlevel 0 exactly at unmatched vertices, all
/// else infinite, every edge unscanned, buckets empty.
/// Throws std::invalid_argument when the matching is invalid.
LevelState init_phase(const Graph& g, const Matching& m);

/// One step of the alternating BFS at search level i: scans unmatched edges
/// from every alive vertex whose evenlevel is i (for even i) or the matched
/// edge from every alive vertex whose oddlevel is i (for odd i), in
/// ascending vertex id then adjacency order. Assigns minlevels i+1, records
/// predecessors, classifies props and bridges. Returns the vertices that
/// received minlevel i+1.
std::vector<int> run_min(const Graph& g, const Matching& m, LevelState& s, int level);

enum class BridgePlacement { placed, deferred };

/// Computes the bridge's tenacity and places it in its bucket, or defers it
/// on an endpoint whose evenlevel is still pending.
BridgePlacement register_bridge(const Graph& g, const Matching& m, LevelState& s, int edge);

/// Called when v has just been assigned its evenlevel as a maxlevel;
/// re-submits the bridges deferred on v. Returns the edges newly placed.
std::vector<int> resolve_pending(const Graph& g, const Matching& m, LevelState& s, int v);

/// True when no frontier or bridge work remains beyond search level i; the
/// current matching then has no structure left to discover this phase.
bool phase_done(const LevelState& s, int level);

/// One line per vertex: `v evenlevel oddlevel tenacity` with `inf` for
/// infinity, sorted by vertex id.
void level_dump(const LevelState& s, std::ostream& out);

/// One line per bucketed bridge, ascending tenacity: `bucket <t> <u> <v>`.
void bridge_dump(const Graph& g, const LevelState& s, std::ostream& out);

}  // namespace mv
