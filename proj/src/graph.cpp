#include "mv/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace mv {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edge_list.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_list.size() * 2);
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!seen.insert(edge_key(u, v)).second)
            throw std::invalid_argument("duplicate edge rejected");
        int id = static_cast<int>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adj_[u].push_back({v, id});
        g.adj_[v].push_back({u, id});
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const auto& e : a)
        if (e.to == target) return true;
    return false;
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        lines.push_back({number, text});
    }
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

Graph parse_dimacs(const std::vector<Line>& lines) {
    long long n = -1, m = -1;
    int declared_at = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& line : lines) {
        if (blank(line.text)) continue;
        std::istringstream ls(line.text);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error(line.number, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw parse_error(line.number, "malformed header, expected `p edge <n> <m>`");
            declared_at = line.number;
            edges.reserve(static_cast<size_t>(m));
        } else if (tag == "e") {
            if (n < 0) throw parse_error(line.number, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v)) throw parse_error(line.number, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line.number, "vertex id out of range");
            if (u == v) throw parse_error(line.number, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw parse_error(line.number, "unrecognized line type `" + tag + "`");
        }
    }
    if (n < 0) throw parse_error(0, "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(declared_at, "edge count mismatch: declared " + std::to_string(m) +
                                           ", found " + std::to_string(edges.size()));
    // Re-check duplicates so the error carries a line number.
    std::unordered_set<std::uint64_t> seen;
    int line_no = 0;
    for (const auto& line : lines) {
        if (blank(line.text)) continue;
        std::istringstream ls(line.text);
        std::string tag;
        long long u, v;
        ls >> tag;
        if (tag != "e") continue;
        ls >> u >> v;
        if (!seen.insert(edge_key(static_cast<int>(u - 1), static_cast<int>(v - 1))).second) {
            line_no = line.number;
            break;
        }
    }
    if (line_no) throw parse_error(line_no, "duplicate edge");
    return Graph::build(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::vector<Line>& lines) {
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& line : lines) {
        if (blank(line.text)) continue;
        std::istringstream ls(line.text);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error(line.number, "malformed header, expected `<n> <m>`");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw parse_error(line.number, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(line.number, "vertex id out of range");
        if (u == v) throw parse_error(line.number, "self-loop");
        if (!seen.insert(edge_key(static_cast<int>(u), static_cast<int>(v))).second)
            throw parse_error(line.number, "duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw parse_error(0, "empty input");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(0, "edge count mismatch: declared " + std::to_string(m) + ", found " +
                                 std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    auto lines = read_lines(in);
    if (format == GraphFormat::auto_detect) {
        format = GraphFormat::edge_list;
        for (const auto& line : lines) {
            if (blank(line.text)) continue;
            char c = line.text[line.text.find_first_not_of(" \t")];
            if (c == 'c' || c == 'p' || c == 'e') format = GraphFormat::dimacs;
            break;
        }
    }
    return format == GraphFormat::dimacs ? parse_dimacs(lines) : parse_edge_list(lines);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void Matching::match(int u, int v) {
    if (partner_[u] >= 0 || partner_[v] >= 0 || u == v)
        throw std::invalid_argument("match() endpoints must be distinct and unmatched");
    partner_[u] = v;
    partner_[v] = u;
    ++size_;
}

void Matching::unmatch(int u) {
    int v = partner_[u];
    if (v < 0) throw std::invalid_argument("unmatch() on unmatched vertex");
    partner_[u] = -1;
    partner_[v] = -1;
    --size_;
}

Matching Matching::from_partners(std::vector<int> partners) {
    Matching m;
    m.partner_ = std::move(partners);
    for (size_t v = 0; v < m.partner_.size(); ++v)
        if (m.partner_[v] >= 0) ++m.size_;
    m.size_ /= 2;
    return m;
}

std::optional<MatchingViolation> validate_matching(const Graph& g, const Matching& m) {
    if (m.vertex_count() != g.vertex_count())
        return MatchingViolation{"matching sized for a different graph", -1, -1};
    int matched_vertices = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int p = m.partner(v);
        if (p < 0) continue;
        if (p >= g.vertex_count() || p == v)
            return MatchingViolation{"partner out of range", v, p};
        if (m.partner(p) != v)
            return MatchingViolation{"partner map not symmetric", v, p};
        if (v < p && !g.has_edge(v, p))
            return MatchingViolation{"matched pair is not a graph edge", v, p};
        ++matched_vertices;
    }
    if (matched_vertices != 2 * m.size())
        return MatchingViolation{"size inconsistent with partner map", -1, -1};
    return std::nullopt;
}

bool is_valid_alternating_path(const Graph& g, const Matching& m, const AlternatingPath& p) {
    if (p.vertices.empty()) return false;
    if (p.matched.size() + 1 != p.vertices.size()) return false;
    std::unordered_set<int> seen;
    for (int v : p.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        int u = p.vertices[i], v = p.vertices[i + 1];
        if (!g.has_edge(u, v)) return false;
        bool matched_edge = m.partner(u) == v;
        if (p.matched[i] != matched_edge) return false;
        if (i > 0 && p.matched[i] == p.matched[i - 1]) return false;
    }
    return true;
}

bool is_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p) {
    if (!is_valid_alternating_path(g, m, p)) return false;
    if (p.length() % 2 == 0) return false;
    if (m.is_matched(p.vertices.front()) || m.is_matched(p.vertices.back())) return false;
    return !p.matched.front() && !p.matched.back();
}

void augment(Matching& m, const AlternatingPath& p) {
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (p.matched[i]) m.unmatch(p.vertices[i]);
    for (size_t i = 0; i + 1 < p.vertices.size(); i += 2)
        m.match(p.vertices[i], p.vertices[i + 1]);
}

Matching greedy_maximal_matching(const Graph& g) {
    Matching m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (m.is_matched(v)) continue;
        for (const auto& e : g.adjacency(v)) {
            if (!m.is_matched(e.to)) {
                m.match(v, e.to);
                break;
            }
        }
    }
    return m;
}

void write_matching(const Matching& m, std::ostream& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.partner(v) > v) pairs.emplace_back(v, m.partner(v));
    std::sort(pairs.begin(), pairs.end());
    out << m.size() << '\n';
    for (auto [u, v] : pairs) out << u << ' ' << v << '\n';
}

Matching parse_matching(std::istream& in, const Graph& g) {
    Matching m(g.vertex_count());
    long long size;
    if (!(in >> size) || size < 0) throw parse_error(1, "malformed matching size line");
    for (long long i = 0; i < size; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error(static_cast<int>(i + 2), "malformed matching line");
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw parse_error(static_cast<int>(i + 2), "vertex id out of range");
        m.match(static_cast<int>(u), static_cast<int>(v));
    }
    if (auto violation = validate_matching(g, m))
        throw parse_error(0, "invalid matching: " + violation->message);
    return m;
}

Graph random_graph(int n, int m, std::mt19937_64& rng) {
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("too many edges requested");
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> seen;
    edges.reserve(m);
    std::uniform_int_distribution<int> pick(0, n > 0 ? n - 1 : 0);
    while (static_cast<int>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (!seen.insert(edge_key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

Matching random_maximal_matching(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    Matching m(g.vertex_count());
    for (int e : order) {
        auto [u, v] = g.edge(e);
        if (!m.is_matched(u) && !m.is_matched(v)) m.match(u, v);
    }
    return m;
}

}  // namespace mv
