#include "mv/petal_forest.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mv {

void PetalForest::reset(int vertex_count) {
    n = vertex_count;
    petals.clear();
    petal_of.assign(n, -1);
    color.assign(n, DdfsColor::none);
    ddfs_parent.assign(n, -1);
    ddfs_entry.assign(n, -1);
    dsu_parent.resize(n);
    dsu_size.assign(n, 1);
    dsu_label.resize(n);
    for (int v = 0; v < n; ++v) {
        dsu_parent[v] = v;
        dsu_label[v] = v;
    }
}

int PetalForest::find(int v) const {
    int root = v;
    while (dsu_parent[root] != root) root = dsu_parent[root];
    while (dsu_parent[v] != root) {
        int next = dsu_parent[v];
        dsu_parent[v] = root;
        v = next;
    }
    return root;
}

int PetalForest::bud_star(int v) const { return dsu_label[find(v)]; }

namespace {

Level bridge_tenacity(const Graph& g, const Matching& m, const LevelState& s, int bridge_edge) {
    auto [u, v] = g.edge(bridge_edge);
    return m.partner(u) == v ? s.oddlevel[u] + s.oddlevel[v] + 1
                             : s.evenlevel[u] + s.evenlevel[v] + 1;
}

void absorb_member(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf,
                   Petal& petal, const DdfsVisit& visit, int& set_root) {
    int w = visit.vertex;
    if (!s.alive[w]) throw std::logic_error("petal member is dead");
    if (pf.petal_of[w] >= 0) throw std::logic_error("vertex swept into a second petal");
    Level max_level = petal.tenacity - s.minlevel(w);
    s.assign_level(w, max_level);  // throws if both levels were already set
    pf.petal_of[w] = petal.id;
    pf.color[w] = visit.color;
    pf.ddfs_parent[w] = visit.parent;
    pf.ddfs_entry[w] = visit.entry;
    petal.members.push_back(w);

    int root_w = pf.find(w);
    if (root_w != set_root) {
        // Union by size; the surviving root is relabeled once the petal is
        // complete.
        if (pf.dsu_size[root_w] > pf.dsu_size[set_root]) std::swap(root_w, set_root);
        pf.dsu_parent[root_w] = set_root;
        pf.dsu_size[set_root] += pf.dsu_size[root_w];
    }
    if (max_level % 2 == 0) resolve_pending(g, m, s, w);
}

}  // namespace

const Petal& create_petal(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf,
                          int bridge_edge, const DdfsOutcome& outcome) {
    if (outcome.kind != DdfsOutcome::Kind::bottleneck || outcome.empty_support())
        throw std::logic_error("create_petal needs a non-empty bottleneck outcome");
    auto [u, v] = g.edge(bridge_edge);

    Petal petal;
    petal.id = static_cast<int>(pf.petals.size());
    petal.bridge_edge = bridge_edge;
    petal.bridge_red = u;
    petal.bridge_green = v;
    petal.bud = outcome.bottleneck;
    petal.tenacity = bridge_tenacity(g, m, s, bridge_edge);
    petal.red_root = pf.bud_star(u);
    petal.green_root = pf.bud_star(v);
    petal.bud_red_parent = outcome.bottleneck_red_parent;
    petal.bud_red_entry = outcome.bottleneck_red_entry;
    petal.bud_green_parent = outcome.bottleneck_green_parent;
    petal.bud_green_entry = outcome.bottleneck_green_entry;

    if (pf.petal_of[petal.bud] >= 0)
        throw std::logic_error("petal bud already belongs to a petal");
    if (!(level_finite(s.evenlevel[petal.bud]) && s.outer(petal.bud)))
        throw std::logic_error("petal bud is not an outer vertex");

    int set_root = pf.find(petal.bud);
    for (const auto& visit : outcome.visits) absorb_member(g, m, s, pf, petal, visit, set_root);
    pf.dsu_label[set_root] = petal.bud;

    pf.petals.push_back(std::move(petal));
    return pf.petals.back();
}

void record_free_pair_levels(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf,
                             int bridge_edge, const DdfsOutcome& outcome) {
    if (outcome.kind != DdfsOutcome::Kind::free_pair)
        throw std::logic_error("record_free_pair_levels needs a free-pair outcome");
    auto [u, v] = g.edge(bridge_edge);
    Level tenacity = bridge_tenacity(g, m, s, bridge_edge);

    // The search stops at the first exit pair, but every vertex in either
    // endpoint's full contracted descent cone carries a maxlevel path through
    // this bridge. Sweep both cones.
    std::vector<char> seen(s.n, false);
    std::vector<int> cone;
    std::vector<int> stack;
    for (int endpoint : {u, v}) {
        int root = pf.bud_star(endpoint);
        if (!seen[root]) {
            seen[root] = true;
            stack.push_back(root);
        }
    }
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        cone.push_back(w);
        for (int raw : s.predecessors[w]) {
            if (!s.alive[raw]) continue;
            int y = pf.bud_star(raw);
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }

    // Free vertices in the cone sit at the ends of would-be augmenting
    // paths: their oddlevel is the bridge tenacity.
    int anchor = -1;
    for (int w : cone)
        if (s.minlevel(w) == 0) {
            anchor = w;
            if (s.oddlevel[w] == kInfLevel) s.assign_level(w, tenacity);
        }
    if (anchor < 0) throw std::logic_error("free-pair cone contains no free vertex");

    Petal petal;
    petal.id = static_cast<int>(pf.petals.size());
    petal.bridge_edge = bridge_edge;
    petal.bridge_red = u;
    petal.bridge_green = v;
    petal.bud = anchor;
    petal.tenacity = tenacity;
    petal.red_root = pf.bud_star(u);
    petal.green_root = pf.bud_star(v);
    int set_root = pf.find(anchor);
    for (int w : cone) {
        if (s.minlevel(w) == 0 || pf.petal_of[w] >= 0) continue;
        Level max_level = tenacity - s.minlevel(w);
        s.assign_level(w, max_level);
        pf.petal_of[w] = petal.id;
        petal.members.push_back(w);
        int root_w = pf.find(w);
        if (root_w != set_root) {
            if (pf.dsu_size[root_w] > pf.dsu_size[set_root]) std::swap(root_w, set_root);
            pf.dsu_parent[root_w] = set_root;
            pf.dsu_size[set_root] += pf.dsu_size[root_w];
        }
        if (max_level % 2 == 0) resolve_pending(g, m, s, w);
    }
    if (!petal.members.empty()) {
        pf.dsu_label[set_root] = anchor;
        pf.petals.push_back(std::move(petal));
    }
}

void run_max(const Graph& g, const Matching& m, LevelState& s, PetalForest& pf, int level,
             const AugmentSink& augment_sink, DdfsRunner& runner, long long* ddfs_steps,
             const TraceSink* trace) {
    Level tenacity = 2 * level + 1;
    if (tenacity < 0 || static_cast<size_t>(tenacity) >= s.bridge_buckets.size()) return;
    for (size_t i = 0; i < s.bridge_buckets[tenacity].size(); ++i) {
        int e = s.bridge_buckets[tenacity][i];
        --s.unprocessed_bridges;
        auto [u, v] = g.edge(e);
        if (!s.alive[u] || !s.alive[v]) continue;
        DdfsOutcome outcome = runner.run_on_graph(g, s, pf, e, trace);
        if (ddfs_steps) *ddfs_steps += outcome.steps;
        if (outcome.kind == DdfsOutcome::Kind::bottleneck) {
            if (!outcome.empty_support()) create_petal(g, m, s, pf, e, outcome);
        } else if (augment_sink) {
            augment_sink(e, outcome);
        }
    }
}

void petal_dump(const PetalForest& pf, std::ostream& out) {
    for (const auto& petal : pf.petals) {
        out << "petal " << petal.id << " bud " << petal.bud << " bridge " << petal.bridge_red
            << ' ' << petal.bridge_green << " members";
        std::vector<int> members = petal.members;
        std::sort(members.begin(), members.end());
        for (int w : members) out << ' ' << w;
        out << '\n';
    }
}

}  // namespace mv
