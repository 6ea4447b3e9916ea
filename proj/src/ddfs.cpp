#include "mv/ddfs.hpp"

#include <algorithm>
#include <stdexcept>

#include "mv/petal_forest.hpp"

namespace mv {

void LayeredGraph::validate() const {
    int n = vertex_count();
    if (static_cast<int>(arcs.size()) != n)
        throw std::invalid_argument("layered graph: arcs not sized to vertices");
    if (red_root < 0 || red_root >= n || green_root < 0 || green_root >= n ||
        red_root == green_root)
        throw std::invalid_argument("layered graph: roots must be two distinct vertices");
    int top = 0;
    for (int v = 0; v < n; ++v) {
        if (layer[v] < 0) throw std::invalid_argument("layered graph: negative layer");
        top = std::max(top, layer[v]);
    }
    if (layer[red_root] != top || layer[green_root] != top)
        throw std::invalid_argument("layered graph: roots must sit in the top layer");
    for (int v = 0; v < n; ++v)
        for (int to : arcs[v]) {
            if (to < 0 || to >= n) throw std::invalid_argument("layered graph: arc out of range");
            if (layer[to] >= layer[v])
                throw std::invalid_argument("layered graph: arc does not descend");
        }
    // Every vertex reaches layer 0: process by ascending layer.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return layer[a] < layer[b]; });
    std::vector<char> reaches(n, false);
    for (int v : order) {
        if (layer[v] == 0) {
            reaches[v] = true;
            continue;
        }
        for (int to : arcs[v]) reaches[v] = reaches[v] || reaches[to];
        if (!reaches[v])
            throw std::invalid_argument("layered graph: vertex " + std::to_string(v) +
                                        " cannot reach layer 0");
    }
}

const DdfsVisit* DdfsOutcome::find(int vertex) const {
    auto it = std::lower_bound(visit_index.begin(), visit_index.end(),
                               std::make_pair(vertex, -1));
    if (it != visit_index.end() && it->first == vertex) return &visits[it->second];
    return nullptr;
}

std::vector<int> DdfsOutcome::red_vertices() const {
    std::vector<int> out;
    for (const auto& v : visits)
        if (v.color == DdfsColor::red) out.push_back(v.vertex);
    return out;
}

std::vector<int> DdfsOutcome::green_vertices() const {
    std::vector<int> out;
    for (const auto& v : visits)
        if (v.color == DdfsColor::green) out.push_back(v.vertex);
    return out;
}

namespace {

constexpr int kRed = 0;
constexpr int kGreen = 1;

DdfsColor side_color(int side) { return side == kRed ? DdfsColor::red : DdfsColor::green; }

struct LayeredView {
    const LayeredGraph& h;
    int size() const { return h.vertex_count(); }
    int layer(int v) const { return h.layer[v]; }
    int degree(int v) const { return static_cast<int>(h.arcs[v].size()); }
    std::pair<int, int> arc(int v, int k) const { return {h.arcs[v][k], h.arcs[v][k]}; }
};

struct ContractedView {
    const Graph& g;
    const LevelState& s;
    const PetalForest& pf;
    int size() const { return s.n; }
    int layer(int v) const { return s.minlevel(v); }
    int degree(int v) const { return static_cast<int>(s.predecessors[v].size()); }
    std::pair<int, int> arc(int v, int k) const {
        int raw = s.predecessors[v][k];
        if (!s.alive[raw]) return {-1, raw};
        return {pf.bud_star(raw), raw};
    }
};

}  // namespace

void DdfsRunner::ensure(int n) {
    if (static_cast<int>(stamp_.size()) < n) {
        stamp_.resize(n, 0);
        owner_.resize(n, DdfsColor::none);
        parent_.resize(n, -1);
        entry_.resize(n, -1);
        cursor_.resize(n, 0);
        color_stamp_.resize(n, 0);
        color_cache_.resize(n, DdfsColor::none);
    }
}

void DdfsRunner::mark_visit(int side, int v, int parent, int entry) {
    stamp_[v] = epoch_;
    owner_[v] = side_color(side);
    parent_[v] = parent;
    entry_[v] = entry;
    cursor_[v] = 0;
    touched_.push_back(v);
}

DdfsColor DdfsRunner::final_color(int v) {
    walk_buffer_.clear();
    int cur = v;
    while (color_stamp_[cur] != epoch_ && parent_[cur] >= 0) {
        walk_buffer_.push_back(cur);
        cur = parent_[cur];
    }
    DdfsColor c = color_stamp_[cur] == epoch_ ? color_cache_[cur] : owner_[cur];
    color_stamp_[cur] = epoch_;
    color_cache_[cur] = c;
    for (int w : walk_buffer_) {
        color_stamp_[w] = epoch_;
        color_cache_[w] = c;
    }
    return c;
}

void DdfsRunner::finish(DdfsOutcome& out) {
    out.visits.clear();
    out.visit_index.clear();
    for (int v : touched_) {
        if (out.kind == DdfsOutcome::Kind::bottleneck && v == out.bottleneck) continue;
        out.visits.push_back({v, final_color(v), parent_[v], entry_[v]});
    }
    out.visit_index.reserve(out.visits.size());
    for (int i = 0; i < static_cast<int>(out.visits.size()); ++i)
        out.visit_index.emplace_back(out.visits[i].vertex, i);
    std::sort(out.visit_index.begin(), out.visit_index.end());
}

void DdfsRunner::emit(const TraceSink* trace, TraceEvent::Kind kind, DdfsColor color, int vertex,
                      int layer) const {
    if (!trace || !*trace) return;
    TraceEvent ev;
    ev.kind = kind;
    ev.color = color;
    ev.vertex = vertex;
    ev.layer = layer;
    ev.red_center_layer = center_layers_[kRed];
    ev.green_center_layer = center_layers_[kGreen];
    (*trace)(ev);
}

template <class View>
bool DdfsRunner::backtrack_search(const View& view, int side, int meet_vertex, DdfsOutcome& out,
                                  const TraceSink* trace) {
    // The searching side's center of activity stays engaged at the meet
    // vertex until the procedure resolves; center_layers_ is not touched.
    auto& stack = stacks_[side];
    const int target_layer = view.layer(meet_vertex);
    while (!stack.empty()) {
        int c = stack.back().vertex;
        if (c != meet_vertex && view.layer(c) <= target_layer) return true;
        if (cursor_[c] < view.degree(c)) {
            int k = cursor_[c]++;
            ++out.steps;
            auto [y, x] = view.arc(c, k);
            if (y < 0) continue;  // dead raw predecessor
            if (!visited(y)) {
                mark_visit(side, y, c, x);
                stack.push_back({y, false});
                emit(trace, TraceEvent::Kind::advance, side_color(side), y, view.layer(y));
            }
            // Visited targets are skipped; the meeting rule applies only to
            // the top-level search.
        } else {
            emit(trace, TraceEvent::Kind::retreat, side_color(side), c, view.layer(c));
            stack.pop_back();
        }
    }
    return false;
}

template <class View>
bool DdfsRunner::meet(const View& view, int scanner, int scan_from, int scan_entry, int v,
                      DdfsOutcome& out, const TraceSink* trace) {
    const int owner_side = owner_[v] == DdfsColor::red ? kRed : kGreen;
    // In-edges of v from both searches: the owner's is its tree edge, the
    // scanner's is the edge that just met it.
    int red_parent, red_entry, green_parent, green_entry;
    if (scanner == kRed) {
        red_parent = scan_from;
        red_entry = scan_entry;
        green_parent = parent_[v];
        green_entry = entry_[v];
    } else {
        green_parent = scan_from;
        green_entry = scan_entry;
        red_parent = parent_[v];
        red_entry = entry_[v];
    }
    // Both searches are conceptually engaged at v while the procedure runs.
    center_layers_[kGreen] = view.layer(v);
    emit(trace, TraceEvent::Kind::meet, side_color(scanner), v, view.layer(v));

    // Green gives way first: it abandons v and tries to reach some other
    // vertex at v's layer or below.
    if (owner_side == kGreen) stacks_[kGreen].pop_back();
    if (backtrack_search(view, kGreen, v, out, trace)) {
        owner_[v] = DdfsColor::red;
        parent_[v] = red_parent;
        entry_[v] = red_entry;
        if (owner_side != kRed) stacks_[kRed].push_back({v, false});
        center_layers_[kRed] = view.layer(v);
        center_layers_[kGreen] = view.layer(stacks_[kGreen].back().vertex);
        return true;
    }
    // Green is exhausted; now red tries to sidestep v.
    center_layers_[kRed] = view.layer(v);
    if (owner_side == kRed) stacks_[kRed].pop_back();
    if (backtrack_search(view, kRed, v, out, trace)) {
        owner_[v] = DdfsColor::green;
        parent_[v] = green_parent;
        entry_[v] = green_entry;
        // v re-enters as green's center but was already backtracked from, so
        // nothing sits beneath it on the green stack.
        stacks_[kGreen].push_back({v, true});
        center_layers_[kGreen] = view.layer(v);
        center_layers_[kRed] = view.layer(stacks_[kRed].back().vertex);
        return true;
    }
    // Both searches are stuck: v is the highest bottleneck.
    out.kind = DdfsOutcome::Kind::bottleneck;
    out.bottleneck = v;
    out.bottleneck_red_parent = red_parent;
    out.bottleneck_red_entry = red_entry;
    out.bottleneck_green_parent = green_parent;
    out.bottleneck_green_entry = green_entry;
    emit(trace, TraceEvent::Kind::bottleneck, DdfsColor::red, v, view.layer(v));
    emit(trace, TraceEvent::Kind::bottleneck, DdfsColor::green, v, view.layer(v));
    return false;
}

template <class View>
DdfsOutcome DdfsRunner::run(const View& view, int red_root, int green_root,
                            const TraceSink* trace) {
    ensure(view.size());
    ++epoch_;
    touched_.clear();
    stacks_[kRed].clear();
    stacks_[kGreen].clear();

    DdfsOutcome out;
    if (red_root == green_root) {
        // Both endpoints contract to the same vertex: empty support.
        out.kind = DdfsOutcome::Kind::bottleneck;
        out.bottleneck = red_root;
        return out;
    }
    mark_visit(kRed, red_root, -1, -1);
    stacks_[kRed].push_back({red_root, false});
    mark_visit(kGreen, green_root, -1, -1);
    stacks_[kGreen].push_back({green_root, false});
    center_layers_[kRed] = view.layer(red_root);
    center_layers_[kGreen] = view.layer(green_root);

    while (true) {
        int rc = stacks_[kRed].back().vertex;
        int gc = stacks_[kGreen].back().vertex;
        if (view.layer(rc) == 0 && view.layer(gc) == 0) {
            if (rc == gc) throw std::logic_error("ddfs: both centers on one layer-0 vertex");
            out.kind = DdfsOutcome::Kind::free_pair;
            out.r0 = rc;
            out.g0 = gc;
            emit(trace, TraceEvent::Kind::free_pair, DdfsColor::red, rc, 0);
            emit(trace, TraceEvent::Kind::free_pair, DdfsColor::green, gc, 0);
            finish(out);
            return out;
        }
        // The higher center moves; red moves first on a tie.
        int mover = view.layer(rc) >= view.layer(gc) ? kRed : kGreen;
        auto& stack = stacks_[mover];
        int c = stack.back().vertex;
        if (cursor_[c] < view.degree(c)) {
            int k = cursor_[c]++;
            ++out.steps;
            auto [y, x] = view.arc(c, k);
            if (y < 0) continue;
            if (!visited(y)) {
                mark_visit(mover, y, c, x);
                stack.push_back({y, false});
                center_layers_[mover] = view.layer(y);
                emit(trace, TraceEvent::Kind::advance, side_color(mover), y, view.layer(y));
            } else if (y == stacks_[1 - mover].back().vertex) {
                if (!meet(view, mover, c, x, y, out, trace)) {
                    finish(out);
                    return out;
                }
            }
        } else {
            emit(trace, TraceEvent::Kind::retreat, side_color(mover), c, view.layer(c));
            stack.pop_back();
            if (stack.empty())
                throw std::logic_error(
                    "ddfs: search stack exhausted outside the meeting procedure");
            center_layers_[mover] = view.layer(stack.back().vertex);
        }
    }
}

DdfsOutcome DdfsRunner::run_layered(const LayeredGraph& h, const TraceSink* trace) {
    h.validate();
    return run(LayeredView{h}, h.red_root, h.green_root, trace);
}

DdfsOutcome DdfsRunner::run_on_graph(const Graph& g, const LevelState& s, const PetalForest& pf,
                                     int bridge_edge, const TraceSink* trace) {
    auto [u, v] = g.edge(bridge_edge);
    if (!s.alive[u] || !s.alive[v])
        throw std::logic_error("ddfs_on_graph: bridge endpoint is dead");
    return run(ContractedView{g, s, pf}, pf.bud_star(u), pf.bud_star(v), trace);
}

DdfsOutcome ddfs_layered(const LayeredGraph& h, const TraceSink* trace) {
    DdfsRunner runner;
    return runner.run_layered(h, trace);
}

DdfsOutcome ddfs_on_graph(const Graph& g, const LevelState& s, const PetalForest& pf,
                          int bridge_edge, const TraceSink* trace) {
    DdfsRunner runner;
    return runner.run_on_graph(g, s, pf, bridge_edge, trace);
}

namespace {

// Intersects the vertex sets of all root-to-layer-0 paths from `root`.
void intersect_paths(const LayeredGraph& h, int root, std::vector<char>& common,
                     long long& budget) {
    std::vector<int> path;
    bool any = false;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (h.layer[v] == 0) {
            if (--budget < 0) throw std::length_error("brute_bottleneck: path budget exceeded");
            if (!any) {
                std::fill(common.begin(), common.end(), false);
                for (int w : path) common[w] = true;
                any = true;
            } else {
                std::vector<char> here(h.vertex_count(), false);
                for (int w : path) here[w] = true;
                for (int w = 0; w < h.vertex_count(); ++w)
                    common[w] = common[w] && here[w];
            }
        } else {
            for (int to : h.arcs[v]) self(self, to);
        }
        path.pop_back();
    };
    dfs(dfs, root);
    if (!any) std::fill(common.begin(), common.end(), false);
}

std::vector<char> forward_reach(const LayeredGraph& h, std::vector<int> seeds, int barrier) {
    std::vector<char> seen(h.vertex_count(), false);
    std::vector<int> stack;
    for (int s : seeds)
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == barrier) continue;  // reachable but never expanded
        for (int to : h.arcs[v])
            if (!seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
    }
    return seen;
}

std::vector<char> backward_reach(const LayeredGraph& h, int sink) {
    std::vector<std::vector<int>> rev(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int to : h.arcs[v]) rev[to].push_back(v);
    std::vector<char> seen(h.vertex_count(), false);
    std::vector<int> stack{sink};
    seen[sink] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int from : rev[v])
            if (!seen[from]) {
                seen[from] = true;
                stack.push_back(from);
            }
    }
    return seen;
}

}  // namespace

std::optional<int> brute_bottleneck(const LayeredGraph& h, long long path_budget) {
    h.validate();
    std::vector<char> from_red(h.vertex_count(), false);
    std::vector<char> from_green(h.vertex_count(), false);
    long long budget = path_budget;
    intersect_paths(h, h.red_root, from_red, budget);
    intersect_paths(h, h.green_root, from_green, budget);
    int best = -1;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (from_red[v] && from_green[v] && (best < 0 || h.layer[v] > h.layer[best])) best = v;
    if (best < 0) return std::nullopt;
    return best;
}

long long count_bottleneck_arcs(const LayeredGraph& h, int b) {
    auto fwd = forward_reach(h, {h.red_root, h.green_root}, b);
    auto back = backward_reach(h, b);
    long long count = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (!fwd[v] || v == b) continue;
        for (int to : h.arcs[v])
            if (back[to]) ++count;
    }
    return count;
}

long long count_free_pair_arcs(const LayeredGraph& h, int r0, int g0) {
    // The free-pair exploration region: every arc whose source the searches
    // can reach. A failed sidestep inside the meeting procedure legitimately
    // scans arcs that lie on no root-to-exit path, so the bound set is the
    // cone toward layer 0 rather than the two certificate paths alone.
    (void)r0;
    (void)g0;
    auto fwd = forward_reach(h, {h.red_root, h.green_root}, -1);
    long long count = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (fwd[v]) count += static_cast<long long>(h.arcs[v].size());
    return count;
}

}  // namespace mv
