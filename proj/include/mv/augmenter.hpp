#pragma once

#include <utility>
#include <vector>

#include "mv/ddfs.hpp"
#include "mv/graph.hpp"
#include "mv/level_state.hpp"
#include "mv/levels.hpp"
#include "mv/petal_forest.hpp"

namespace mv {

struct PhaseStats {
    int search_levels = 0;
    long long min_edge_touches = 0;
    long long ddfs_steps = 0;
    int petals = 0;
    int paths_found = 0;
    Level l_m = kInfLevel;
};

/// Alternating path from v down to b, where b is reachable from v through
/// v's chain of petal buds. The path realizes evenlevel(b;v): an outer v
/// descends predecessor links, an inner v crosses its petal's bridge, and
/// nested petals open recursively. Throws std::logic_error on a structural
/// inconsistency (petal bookkeeping bug).
AlternatingPath open_petal(const Graph& g, const Matching& m, const LevelState& s,
                           const PetalForest& pf, int v, int b);

/// Builds the minimum-length augmenting path certified by a free-pair DDFS
/// outcome on the given bridge: both tree paths are expanded through their
/// petals and joined across the bridge.
AlternatingPath extract_path(const Graph& g, const Matching& m, const LevelState& s,
                             const PetalForest& pf, int bridge_edge, const DdfsOutcome& outcome);

/// Flips the matching along p, kills every path vertex, then iteratively
/// kills any matched-side vertex left without an alive predecessor. Returns
/// the removed vertices.
std::vector<int> augment_and_cascade(const Graph& g, Matching& m, LevelState& s,
                                     const AlternatingPath& p);

/// One full phase against m: alternating BFS + bridge processing, augmenting
/// along a maximal set of disjoint minimum-length paths.
std::pair<Matching, PhaseStats> run_phase(const Graph& g, const Matching& m,
                                          const PhaseConfig& config = {},
                                          const TraceSink* trace = nullptr);

struct MatchingResult {
    Matching matching;
    std::vector<PhaseStats> phases;
};

/// Repeats phases until none finds an augmenting path; the result is a
/// maximum matching.
MatchingResult maximum_matching(const Graph& g, const Matching& initial,
                                const PhaseConfig& config = {},
                                const TraceSink* trace = nullptr);
MatchingResult maximum_matching(const Graph& g, const PhaseConfig& config = {},
                                const TraceSink* trace = nullptr);

/// Runs the full level computation for one phase with augmentation disabled
/// (free-pair outcomes are recorded in stats.l_m and skipped), exposing the
/// final per-phase state for analysis dumps and level-correctness checks.
struct PhaseAnalysis {
    LevelState state;
    PetalForest forest;
    PhaseStats stats;
};
PhaseAnalysis analyze_phase(const Graph& g, const Matching& m, const PhaseConfig& config = {},
                            const TraceSink* trace = nullptr);

}  // namespace mv
