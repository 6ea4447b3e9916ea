#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mv/graph.hpp"
#include "mv/level_state.hpp"
#include "mv/levels.hpp"

namespace mv {

struct PetalForest;

/// Directed layered graph: every arc runs from a higher layer to a strictly
/// lower one (arbitrary jump size); two designated roots sit in the top
/// layer; every vertex can reach layer 0.
struct LayeredGraph {
    std::vector<int> layer;
    std::vector<std::vector<int>> arcs;
    int red_root = -1;
    int green_root = -1;

    int vertex_count() const { return static_cast<int>(layer.size()); }
    /// Throws std::invalid_argument on a malformed instance.
    void validate() const;
};

enum class DdfsColor : unsigned char { none, red, green };

struct TraceEvent {
    enum class Kind { advance, retreat, meet, bottleneck, free_pair } kind;
    DdfsColor color;
    int vertex;
    int layer;
    // Center-of-activity layers after the event; -1 when a stack is empty.
    int red_center_layer;
    int green_center_layer;
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct DdfsVisit {
    int vertex;
    DdfsColor color;
    int parent;  // tree parent, -1 at a root
    int entry;   // raw predecessor whose contraction landed here (== vertex in the layered form)
};

struct DdfsOutcome {
    enum class Kind { bottleneck, free_pair } kind = Kind::bottleneck;
    int bottleneck = -1;
    int r0 = -1;
    int g0 = -1;
    long long steps = 0;  // arc examinations

    /// Every visited vertex in visit order, bottleneck excluded. The red
    /// (green) tree is the set of parent links of red (green) visits.
    std::vector<DdfsVisit> visits;

    // The bottleneck's in-edge from each search tree.
    int bottleneck_red_parent = -1, bottleneck_red_entry = -1;
    int bottleneck_green_parent = -1, bottleneck_green_entry = -1;

    bool empty_support() const { return kind == Kind::bottleneck && visits.empty(); }
    const DdfsVisit* find(int vertex) const;
    std::vector<int> red_vertices() const;
    std::vector<int> green_vertices() const;

    std::vector<std::pair<int, int>> visit_index;  // (vertex, position), sorted
};

/// Double depth-first search. Scratch arrays persist across runs, so one
/// runner can serve every bridge of a phase without reallocation.
class DdfsRunner {
public:
    DdfsOutcome run_layered(const LayeredGraph& h, const TraceSink* trace = nullptr);

    /// The on-graph form: layers are minlevels, the roots are the bud* of the
    /// bridge endpoints, and successors of a center are the bud* of its alive
    /// predecessors. Returns the empty-support sentinel when both endpoints
    /// contract to the same vertex.
    DdfsOutcome run_on_graph(const Graph& g, const LevelState& s, const PetalForest& pf,
                             int bridge_edge, const TraceSink* trace = nullptr);

private:
    template <class View>
    DdfsOutcome run(const View& view, int red_root, int green_root, const TraceSink* trace);

    template <class View>
    bool backtrack_search(const View& view, int side, int meet_vertex, DdfsOutcome& out,
                          const TraceSink* trace);

    template <class View>
    bool meet(const View& view, int scanner, int scan_from, int scan_entry, int v,
              DdfsOutcome& out, const TraceSink* trace);

    void ensure(int n);
    bool visited(int v) const { return stamp_[v] == epoch_; }
    void mark_visit(int side, int v, int parent, int entry);
    DdfsColor final_color(int v);
    void finish(DdfsOutcome& out);
    void emit(const TraceSink* trace, TraceEvent::Kind kind, DdfsColor color, int vertex,
              int layer) const;

    struct StackEntry {
        int vertex;
        bool reentry;  // placed back without a stack below it (the no-push rule)
    };

    int epoch_ = 0;
    int center_layers_[2] = {-1, -1};
    std::vector<int> stamp_;
    std::vector<DdfsColor> owner_;
    std::vector<int> parent_;
    std::vector<int> entry_;
    std::vector<int> cursor_;
    std::vector<int> color_stamp_;
    std::vector<DdfsColor> color_cache_;
    std::vector<int> touched_;
    std::vector<StackEntry> stacks_[2];
    std::vector<int> walk_buffer_;
};

DdfsOutcome ddfs_layered(const LayeredGraph& h, const TraceSink* trace = nullptr);
DdfsOutcome ddfs_on_graph(const Graph& g, const LevelState& s, const PetalForest& pf,
                          int bridge_edge, const TraceSink* trace = nullptr);

/// Exhaustive oracle: enumerates every root-to-layer-0 path of both roots and
/// returns the highest vertex common to all of them, if any. Throws
/// std::length_error when the number of paths exceeds the budget.
std::optional<int> brute_bottleneck(const LayeredGraph& h, long long path_budget = 2'000'000);

/// |E_b|: arcs on some root-to-b path.
long long count_bottleneck_arcs(const LayeredGraph& h, int b);

/// |E_p|: arcs of the free-pair exploration region (every arc whose source
/// is reachable from a root).
long long count_free_pair_arcs(const LayeredGraph& h, int r0, int g0);

}  // namespace mv
