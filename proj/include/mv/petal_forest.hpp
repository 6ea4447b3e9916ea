#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "mv/ddfs.hpp"
#include "mv/graph.hpp"
#include "mv/level_state.hpp"
#include "mv/levels.hpp"

namespace mv {

struct Petal {
    int id;
    int bridge_edge;
    int bridge_red;    // endpoint whose bud* seeded the red search
    int bridge_green;  // endpoint whose bud* seeded the green search
    int bud;
    Level tenacity;
    std::vector<int> members;
    int red_root;
    int green_root;
    // The bud's in-edge from each search tree.
    int bud_red_parent = -1, bud_red_entry = -1;
    int bud_green_parent = -1, bud_green_entry = -1;
};

/// Petals discovered so far in the phase, the per-vertex colors and DDFS
/// tree pointers of their members, and the disjoint-set structure whose
/// find-representative realizes bud*.
struct PetalForest {
    int n = 0;
    std::vector<Petal> petals;
    std::vector<int> petal_of;  // -1 when in no petal
    std::vector<DdfsColor> color;
    std::vector<int> ddfs_parent;  // tree parent within the owning petal's search
    std::vector<int> ddfs_entry;   // raw predecessor expanded on that tree edge

    // Union-find with path compression and union by size; the label of a
    // root names the set's current bud.
    mutable std::vector<int> dsu_parent;
    std::vector<int> dsu_size;
    std::vector<int> dsu_label;

    void reset(int vertex_count);
    int bud_star(int v) const;
    int find(int v) const;
    const Petal& petal(int id) const { return petals[id]; }
};

/// Turns a bottleneck outcome into a petal: members = red ∪ green, each
/// member receives maxlevel = tenacity - minlevel in its empty level slot,
/// its color and tree pointers, membership of the bud's dsu set, a slot in
/// the level bucket of the new maxlevel, and deferred-bridge resolution.
/// Throws std::logic_error if a member already carries both levels (the
/// synchronization contract was broken upstream).
const Petal& create_petal(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf,
                          int bridge_edge, const DdfsOutcome& outcome);

/// Invoked by run_max on a free-pair outcome (only possible at the final
/// search level of a phase).
using AugmentSink = std::function<void(int bridge_edge, const DdfsOutcome&)>;

/// Procedure MAX at search level i: for each bridge of tenacity 2i+1 with
/// both endpoints alive, run the on-graph DDFS. Bottleneck -> create_petal;
/// free pair -> augment_sink (skipped entirely when the sink is empty);
/// empty-support sentinel -> no-op.
void run_max(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf, int level,
             const AugmentSink& augment_sink, DdfsRunner& runner,
             long long* ddfs_steps = nullptr, const TraceSink* trace = nullptr);

/// Analysis-only counterpart of create_petal for free-pair outcomes: every
/// vertex in either endpoint's contracted descent cone carries a maxlevel
/// path through the bridge, so the cone's matched vertices get their
/// maxlevels (grouped as one petal anchored at a free vertex) and the cone's
/// free vertices get oddlevel = the bridge tenacity. A real phase augments
/// instead and never calls this.
void record_free_pair_levels(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf,
                             int bridge_edge, const DdfsOutcome& outcome);

/// `petal <id> bud <b> bridge <u> <v> members ...`, creation order.
void petal_dump(const PetalForest& pf, std::ostream& out);

}  // namespace mv
