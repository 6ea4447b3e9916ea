#include "mv/oracle.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace mv::oracle {

namespace {

std::string vname(Level x) {
    return level_finite(x) ? std::to_string(x) : std::string("inf");
}

void guard_size(const Graph& g, const OracleOptions& opts) {
    if (g.vertex_count() > opts.max_n)
        throw limit_error("oracle size guard: n = " + std::to_string(g.vertex_count()) +
                          " exceeds bound " + std::to_string(opts.max_n));
}

// Depth-first enumeration of simple alternating paths. The visitor is
// invoked once per path prefix of length >= 1, with the vertex sequence and
// edge ids. Budget counts extensions and trips the limit_error guard.
template <class Visitor>
class PathEnumerator {
public:
    PathEnumerator(const Graph& g, const Matching& m, long long budget, Visitor visit)
        : g_(g), m_(m), budget_(budget), visit_(visit), on_path_(g.vertex_count(), false) {}

    // start_matched: parity of the first edge to take out of `start`.
    void run(int start, bool start_matched) {
        path_.assign(1, start);
        edges_.clear();
        on_path_[start] = true;
        extend(start, start_matched);
        on_path_[start] = false;
    }

private:
    void extend(int v, bool need_matched) {
        for (const auto& e : g_.adjacency(v)) {
            bool matched_edge = m_.partner(v) == e.to;
            if (matched_edge != need_matched) continue;
            if (on_path_[e.to]) continue;
            if (--budget_ < 0) throw limit_error("oracle path budget exceeded");
            on_path_[e.to] = true;
            path_.push_back(e.to);
            edges_.push_back(e.edge);
            visit_(path_, edges_);
            extend(e.to, !need_matched);
            on_path_[e.to] = false;
            path_.pop_back();
            edges_.pop_back();
        }
    }

    const Graph& g_;
    const Matching& m_;
    long long budget_;
    Visitor visit_;
    std::vector<char> on_path_;
    std::vector<int> path_;
    std::vector<int> edges_;
};

// Runs the visitor over every simple alternating path from every unmatched
// vertex (first edge unmatched, as all edges at an unmatched vertex are).
template <class Visitor>
void for_each_alternating_path(const Graph& g, const Matching& m, const OracleOptions& opts,
                               Visitor visit) {
    PathEnumerator<Visitor> en(g, m, opts.path_budget, visit);
    for (int f = 0; f < g.vertex_count(); ++f)
        if (!m.is_matched(f)) en.run(f, false);
}

}  // namespace

std::vector<int> OracleProfile::base_chain(int v) const {
    std::vector<int> chain;
    int cur = v;
    while (cur >= 0 && base[cur] >= 0) {
        cur = base[cur];
        chain.push_back(cur);
        if (static_cast<int>(chain.size()) > n) break;  // cycle would be a bug
    }
    return chain;
}

bool OracleProfile::all_bases_defined(int v, const Matching& m) const {
    if (!m.is_matched(v)) return true;
    for (int b : base_chain(v))
        if (!m.is_matched(b)) return true;
    return false;
}

OracleProfile enumerate_levels(const Graph& g, const Matching& m, const OracleOptions& opts) {
    guard_size(g, opts);
    if (auto violation = validate_matching(g, m))
        throw std::invalid_argument("invalid matching: " + violation->message);
    OracleProfile p;
    p.n = g.vertex_count();
    p.evenlevel.assign(p.n, kInfLevel);
    p.oddlevel.assign(p.n, kInfLevel);
    for (int v = 0; v < p.n; ++v)
        if (!m.is_matched(v)) p.evenlevel[v] = 0;
    for_each_alternating_path(g, m, opts, [&](const std::vector<int>& path, const std::vector<int>&) {
        int v = path.back();
        Level len = static_cast<Level>(path.size()) - 1;
        Level& slot = (len % 2 == 0) ? p.evenlevel[v] : p.oddlevel[v];
        slot = level_min(slot, len);
    });
    p.l_m = kInfLevel;
    for (int v = 0; v < p.n; ++v)
        if (!m.is_matched(v)) p.l_m = level_min(p.l_m, p.oddlevel[v]);
    return p;
}

void classify_edges(OracleProfile& p, const Graph& g, const Matching& m,
                    const OracleOptions& opts) {
    p.edge_tenacity.assign(g.edge_count(), kInfLevel);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (m.partner(u) == v)
            p.edge_tenacity[e] = level_add(level_add(p.oddlevel[u], p.oddlevel[v]), 1);
        else
            p.edge_tenacity[e] = level_add(level_add(p.evenlevel[u], p.evenlevel[v]), 1);
    }

    // An edge is a prop iff it closes some minlevel path of one endpoint.
    p.edge_class.assign(g.edge_count(), EdgeClass::bridge);
    for_each_alternating_path(g, m, opts,
                              [&](const std::vector<int>& path, const std::vector<int>& edges) {
                                  int v = path.back();
                                  Level len = static_cast<Level>(path.size()) - 1;
                                  if (len == p.minlevel(v)) p.edge_class[edges.back()] = EdgeClass::prop;
                              });

    // Support membership is restricted to matched vertices: an unmatched
    // vertex can only reach tenacity l_m, where bridges feed augmentation
    // rather than petals.
    p.bridge_support.assign(g.edge_count(), {});
    for_each_alternating_path(g, m, opts,
                              [&](const std::vector<int>& path, const std::vector<int>& edges) {
                                  int v = path.back();
                                  if (!m.is_matched(v)) return;
                                  Level len = static_cast<Level>(path.size()) - 1;
                                  Level t = p.tenacity(v);
                                  if (!level_finite(t) || t > p.l_m) return;
                                  if (len != p.maxlevel(v) || len == p.minlevel(v)) return;
                                  for (int e : edges)
                                      if (p.edge_class[e] == EdgeClass::bridge &&
                                          p.edge_tenacity[e] == t)
                                          p.bridge_support[e].push_back(v);
                              });
    for (auto& s : p.bridge_support) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

void compute_bases(OracleProfile& p, const Graph& g, const Matching& m,
                   const OracleOptions& opts) {
    p.f_sets.assign(p.n, {});
    for_each_alternating_path(g, m, opts,
                              [&](const std::vector<int>& path, const std::vector<int>&) {
                                  int v = path.back();
                                  Level len = static_cast<Level>(path.size()) - 1;
                                  Level want = (len % 2 == 0) ? p.evenlevel[v] : p.oddlevel[v];
                                  if (len != want) return;
                                  Level t = p.tenacity(v);
                                  int highest = -1;
                                  for (size_t j = 0; j + 1 < path.size(); ++j)
                                      if (p.tenacity(path[j]) > t) highest = path[j];
                                  p.f_sets[v].push_back(highest);
                              });
    for (auto& s : p.f_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    p.base.assign(p.n, -1);
    p.base_violations.clear();
    for (int v = 0; v < p.n; ++v) {
        Level t = p.tenacity(v);
        if (!level_finite(t) || t >= p.l_m) continue;
        const auto& fs = p.f_sets[v];
        if (fs.size() == 1 && fs[0] >= 0) {
            p.base[v] = fs[0];
        } else {
            std::ostringstream os;
            os << "base of vertex " << v << " (tenacity " << t << ") is not a singleton: {";
            for (size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << fs[i];
            os << "}";
            p.base_violations.push_back(os.str());
        }
    }
}

namespace {

struct BlossomBuilder {
    const OracleProfile& p;
    std::map<std::pair<int, Level>, std::vector<int>> members_memo;
    std::map<std::pair<int, Level>, int> depth_memo;

    std::vector<int> s_set(int b, Level t) const {
        std::vector<int> s;
        for (int v = 0; v < p.n; ++v)
            if (p.tenacity(v) == t && p.base[v] == b) s.push_back(v);
        return s;
    }

    const std::vector<int>& members(int b, Level t) {
        auto key = std::make_pair(b, t);
        auto it = members_memo.find(key);
        if (it != members_memo.end()) return it->second;
        std::set<int> out;
        if (t >= 3) {
            auto s = s_set(b, t);
            out.insert(s.begin(), s.end());
            s.push_back(b);
            for (int v : s)
                if (p.outer(v))
                    for (int w : members(v, t - 2)) out.insert(w);
        }
        return members_memo.emplace(key, std::vector<int>(out.begin(), out.end())).first->second;
    }

    int depth(int b, Level t) {
        if (t <= 1) return 0;
        auto key = std::make_pair(b, t);
        auto it = depth_memo.find(key);
        if (it != depth_memo.end()) return it->second;
        depth_memo[key] = 0;  // placeholder against accidental recursion
        auto s = s_set(b, t);
        int d;
        if (s.empty()) {
            d = depth(b, t - 2);
        } else {
            d = 0;
            s.push_back(b);
            for (int v : s)
                if (p.outer(v)) d = std::max(d, depth(v, t - 2));
            d += 1;
        }
        depth_memo[key] = d;
        return d;
    }

    // base_{>t}(v): the first iterated base of tenacity > t, provided the
    // previous chain element has tenacity <= t.
    int base_above(int v, Level t) const {
        if (p.tenacity(v) > t) return -1;
        int prev = v;
        int cur = p.base[v];
        while (cur >= 0) {
            if (p.tenacity(cur) > t) return p.tenacity(prev) <= t ? cur : -1;
            prev = cur;
            cur = p.base[cur];
        }
        return -1;
    }

    std::vector<int> members_alt(int b, Level t) const {
        std::vector<int> out;
        for (int v = 0; v < p.n; ++v)
            if (p.tenacity(v) <= t && base_above(v, t) == b) out.push_back(v);
        return out;
    }
};

}  // namespace

void build_blossoms(OracleProfile& p) {
    p.blossoms.clear();
    BlossomBuilder bb{p, {}, {}};
    Level max_t = 0;
    for (int v = 0; v < p.n; ++v)
        if (level_finite(p.tenacity(v)) && p.tenacity(v) < p.l_m)
            max_t = level_max(max_t, p.tenacity(v));
    for (int b = 0; b < p.n; ++b) {
        if (!p.outer(b)) continue;
        for (Level t = 3; t <= max_t; t += 2) {
            if (t >= p.l_m || p.tenacity(b) <= t) continue;
            auto members = bb.members(b, t);
            if (members.empty()) continue;
            OracleBlossom blossom;
            blossom.base = b;
            blossom.tenacity = t;
            blossom.members = members;
            blossom.members_alt = bb.members_alt(b, t);
            blossom.depth = bb.depth(b, t);
            p.blossoms.push_back(std::move(blossom));
        }
    }
}

OracleProfile full_profile(const Graph& g, const Matching& m, const OracleOptions& opts) {
    OracleProfile p = enumerate_levels(g, m, opts);
    classify_edges(p, g, m, opts);
    compute_bases(p, g, m, opts);
    build_blossoms(p);
    return p;
}

BaseLevels levels_from_base(const Graph& g, const Matching& m, int b,
                            std::vector<std::vector<int>>* minimal_paths_out,
                            const OracleOptions& opts) {
    guard_size(g, opts);
    BaseLevels out;
    out.even.assign(g.vertex_count(), kInfLevel);
    out.odd.assign(g.vertex_count(), kInfLevel);
    out.even[b] = 0;
    {
        PathEnumerator en(g, m, opts.path_budget,
                          [&](const std::vector<int>& path, const std::vector<int>&) {
                              int v = path.back();
                              Level len = static_cast<Level>(path.size()) - 1;
                              Level& slot = (len % 2 == 0) ? out.even[v] : out.odd[v];
                              slot = level_min(slot, len);
                          });
        en.run(b, false);
    }
    if (minimal_paths_out) {
        PathEnumerator en(g, m, opts.path_budget,
                          [&](const std::vector<int>& path, const std::vector<int>&) {
                              int v = path.back();
                              Level len = static_cast<Level>(path.size()) - 1;
                              Level want = (len % 2 == 0) ? out.even[v] : out.odd[v];
                              if (len == want) minimal_paths_out->push_back(path);
                          });
        en.run(b, false);
    }
    return out;
}

namespace {

constexpr size_t kMaxFailures = 20;

void record(StructureReport& report, const std::string& message) {
    if (report.failures.size() < kMaxFailures) report.failures.push_back(message);
}

}  // namespace

StructureReport check_structure(const OracleProfile& p, const Graph& g, const Matching& m,
                                const OracleOptions& opts) {
    StructureReport report;
    if (p.base.size() != static_cast<size_t>(p.n) ||
        p.edge_class.size() != static_cast<size_t>(g.edge_count()))
        throw std::invalid_argument("check_structure needs a full profile");

    for (const auto& violation : p.base_violations) record(report, violation);

    // Matched-edge tenacity: t(u) = t(v) = t(u,v).
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (m.partner(u) != v) continue;
        if (p.tenacity(u) != p.tenacity(v) || p.tenacity(u) != p.edge_tenacity[e]) {
            std::ostringstream os;
            os << "matched edge (" << u << "," << v << ") tenacity mismatch: t(u)="
               << vname(p.tenacity(u)) << " t(v)=" << vname(p.tenacity(v))
               << " t(e)=" << vname(p.edge_tenacity[e]);
            record(report, os.str());
        }
    }

    // Unmatched bridges of tenacity <= l_m: endpoint tenacity bounded by edge tenacity.
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (m.partner(u) == v || p.edge_class[e] != EdgeClass::bridge) continue;
        if (p.edge_tenacity[e] > p.l_m) continue;
        if (p.tenacity(u) > p.edge_tenacity[e] || p.tenacity(v) > p.edge_tenacity[e]) {
            std::ostringstream os;
            os << "unmatched bridge (" << u << "," << v << ") of tenacity "
               << vname(p.edge_tenacity[e]) << " has an endpoint of larger tenacity";
            record(report, os.str());
        }
    }

    // Blossom laminarity and equivalence of the two definitions.
    for (const auto& blossom : p.blossoms) {
        if (blossom.members != blossom.members_alt) {
            std::ostringstream os;
            os << "blossom (base " << blossom.base << ", tenacity " << blossom.tenacity
               << "): recursive and iterated-base definitions disagree";
            record(report, os.str());
        }
    }
    for (size_t i = 0; i < p.blossoms.size(); ++i) {
        for (size_t j = i + 1; j < p.blossoms.size(); ++j) {
            const auto& a = p.blossoms[i].members;
            const auto& b = p.blossoms[j].members;
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) continue;
            bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
            bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
            if (!a_in_b && !b_in_a) {
                std::ostringstream os;
                os << "blossoms (" << p.blossoms[i].base << "," << p.blossoms[i].tenacity
                   << ") and (" << p.blossoms[j].base << "," << p.blossoms[j].tenacity
                   << ") are neither disjoint nor nested";
                record(report, os.str());
            }
        }
    }

    // Cache of levels-from-base per base vertex, for the concat check.
    std::map<int, BaseLevels> from_base;
    auto base_levels = [&](int b) -> const BaseLevels& {
        auto it = from_base.find(b);
        if (it == from_base.end()) it = from_base.emplace(b, levels_from_base(g, m, b, nullptr, opts)).first;
        return it->second;
    };

    std::set<int> skipped_vertices;

    for_each_alternating_path(g, m, opts, [&](const std::vector<int>& path,
                                              const std::vector<int>& edges) {
        int v = path.back();
        Level len = static_cast<Level>(path.size()) - 1;
        Level want = (len % 2 == 0) ? p.evenlevel[v] : p.oddlevel[v];
        if (len != want) return;
        Level t = p.tenacity(v);

        // Limited BFS-honesty along this minimal path.
        for (Level j = 0; j < len; ++j) {
            int u = path[j];
            if (p.tenacity(u) < t) continue;
            Level expected = (j % 2 == 0) ? p.evenlevel[u] : p.oddlevel[u];
            bool honest = (j == expected);
            bool minlevel_hit = (p.tenacity(u) == t) || (j == p.minlevel(u));
            if (!honest || !minlevel_hit) {
                std::ostringstream os;
                os << "BFS-honesty fails for vertex " << u << " at offset " << j
                   << " on a level-" << len << " path to " << v;
                record(report, os.str());
            }
        }

        // Exactly one bridge of tenacity t on every maxlevel path, t <= l_m.
        if (level_finite(t) && t <= p.l_m && len == p.maxlevel(v) && len != p.minlevel(v)) {
            int bridges = 0;
            for (int e : edges)
                if (p.edge_class[e] == EdgeClass::bridge && p.edge_tenacity[e] == t) ++bridges;
            if (bridges != 1) {
                std::ostringstream os;
                os << "maxlevel(" << v << ") path carries " << bridges
                   << " bridges of tenacity " << t << " (want exactly 1)";
                record(report, os.str());
            }
        }

        if (level_finite(t) && t < p.l_m) {
            // Decomposition at the base: prefix is an evenlevel(base) path and
            // the remainder is a minimal path from the base.
            int b = p.base[v];
            if (b >= 0) {
                int pos = -1;
                for (Level j = 0; j <= len; ++j)
                    if (path[j] == b) pos = j;
                if (pos < 0 || pos != p.evenlevel[b]) {
                    std::ostringstream os;
                    os << "base " << b << " does not split the level-" << len << " path to " << v
                       << " at evenlevel(base)";
                    record(report, os.str());
                } else {
                    const auto& bl = base_levels(b);
                    Level rest = len - pos;
                    Level expected = (rest % 2 == 0) ? bl.even[v] : bl.odd[v];
                    if (rest != expected) {
                        std::ostringstream os;
                        os << "suffix from base " << b << " to " << v << " has length " << rest
                           << ", expected " << vname(expected);
                        record(report, os.str());
                    }
                }
            }
        }

        // Iterated bases of every path vertex lie on the path, whenever the
        // endpoint has all iterated bases defined.
        if (p.all_bases_defined(v, m)) {
            for (Level j = 1; j <= len; ++j) {
                int u = path[j];
                if (!p.all_bases_defined(u, m)) {
                    skipped_vertices.insert(u);
                    continue;
                }
                for (int base_vertex : p.base_chain(u)) {
                    if (std::find(path.begin(), path.end(), base_vertex) == path.end()) {
                        std::ostringstream os;
                        os << "iterated base " << base_vertex << " of " << u
                           << " missing from a level-" << len << " path to " << v;
                        record(report, os.str());
                    }
                }
            }
        }
    });

    // Blossom path confinement: minimal paths from base(v) to v stay inside
    // the blossom (plus the base itself).
    for (int v = 0; v < p.n; ++v) {
        Level t = p.tenacity(v);
        if (!level_finite(t) || t >= p.l_m) continue;
        int b = p.base[v];
        if (b < 0) continue;
        const OracleBlossom* blossom = nullptr;
        for (const auto& candidate : p.blossoms)
            if (candidate.base == b && candidate.tenacity == t) blossom = &candidate;
        if (!blossom) {
            record(report, "missing blossom for base " + std::to_string(b) + " tenacity " +
                               std::to_string(t));
            continue;
        }
        std::vector<std::vector<int>> paths;
        levels_from_base(g, m, b, &paths, opts);
        for (const auto& path : paths) {
            if (path.back() != v) continue;
            for (int u : path) {
                if (u == b) continue;
                if (!std::binary_search(blossom->members.begin(), blossom->members.end(), u)) {
                    std::ostringstream os;
                    os << "vertex " << u << " on a base-" << b << " path to " << v
                       << " escapes blossom of tenacity " << t;
                    record(report, os.str());
                }
            }
        }
    }

    for (int v : skipped_vertices)
        report.skipped.push_back("vertex " + std::to_string(v) +
                                 " skipped: iterated-base chain leaves the defined range");
    return report;
}

int max_matching_exhaustive(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw limit_error("exhaustive matching guard: n = " + std::to_string(n) +
                          " exceeds bound " + std::to_string(max_n));
    if (n == 0) return 0;
    std::vector<unsigned> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    std::vector<signed char> dp(1u << n, -1);
    dp[0] = 0;
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int v = __builtin_ctz(mask);
        unsigned rest = mask & (mask - 1);  // mask without v
        int best = dp[rest];
        unsigned candidates = nbr[v] & rest;
        while (candidates) {
            int u = __builtin_ctz(candidates);
            candidates &= candidates - 1;
            best = std::max(best, 1 + dp[rest & ~(1u << u)]);
        }
        dp[mask] = static_cast<signed char>(best);
    }
    return dp.back();
}

namespace {

// Classic blossom-contraction matcher (queue-based alternating forest with
// base contraction). Independent of the engine by construction.
class ContractionMatcher {
public:
    explicit ContractionMatcher(const Graph& g)
        : n_(g.vertex_count()),
          match_(n_, -1),
          parent_(n_),
          base_(n_),
          used_(n_),
          in_blossom_(n_) {
        adj_.resize(n_);
        for (auto [u, v] : g.edges()) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }

    int solve() {
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0 && find_augmenting_from(v)) ++size;
        return size;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool find_augmenting_from(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        std::queue<int> q;
        used_[root] = true;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = true;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        int cur = to;
                        while (cur >= 0) {
                            int prev = parent_[cur];
                            int next = prev >= 0 ? match_[prev] : -1;
                            match_[cur] = prev;
                            if (prev >= 0) match_[prev] = cur;
                            cur = next;
                        }
                        return true;
                    }
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

int blossom_reference_matching(const Graph& g) { return ContractionMatcher(g).solve(); }

std::vector<AlternatingPath> enumerate_min_augmenting_paths(const Graph& g, const Matching& m,
                                                            const OracleOptions& opts) {
    guard_size(g, opts);
    OracleProfile p = enumerate_levels(g, m, opts);
    std::vector<AlternatingPath> out;
    if (!level_finite(p.l_m)) return out;
    for_each_alternating_path(g, m, opts,
                              [&](const std::vector<int>& path, const std::vector<int>&) {
                                  int v = path.back();
                                  Level len = static_cast<Level>(path.size()) - 1;
                                  if (len != p.l_m || m.is_matched(v)) return;
                                  AlternatingPath ap;
                                  ap.vertices = path;
                                  for (size_t i = 0; i + 1 < path.size(); ++i)
                                      ap.matched.push_back(m.partner(path[i]) == path[i + 1]);
                                  out.push_back(std::move(ap));
                              });
    return out;
}

void profile_dump(const OracleProfile& p, std::ostream& out) {
    for (int v = 0; v < p.n; ++v)
        out << v << ' ' << vname(p.evenlevel[v]) << ' ' << vname(p.oddlevel[v]) << ' '
            << vname(p.tenacity(v)) << '\n';
}

}  // namespace mv::oracle
