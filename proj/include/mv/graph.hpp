#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mv {

/// Thrown by the input parsers; carries the 1-based line number of the
/// offending input line (0 when the whole stream is at fault).
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct EdgeEnd {
    int to;
    int edge;
};

/// Simple undirected graph over dense vertex ids 0..n-1.
/// Immutable once built; rejects self-loops and duplicate edges.
class Graph {
public:
    Graph() = default;

    /// Builds and validates. Throws std::invalid_argument on a self-loop,
    /// duplicate edge, or out-of-range endpoint.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<EdgeEnd>& adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Endpoint of edge e opposite to v.
    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<EdgeEnd>> adj_;
};

enum class GraphFormat {
    auto_detect,
    dimacs,
    edge_list,
};

/// Reads a graph in DIMACS edge format (`c` comments, `p edge n m`, `e u v`
/// with 1-based ids) or plain edge-list format (`n m` header then 0-based
/// `u v` lines). Throws parse_error with the offending line number.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::auto_detect);

/// Writes the edge-list form: `n m` then one `u v` per edge in id order.
void serialize_edge_list(const Graph& g, std::ostream& out);

/// Per-vertex partner map. partner(v) == -1 means v is unmatched.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : partner_(n, -1) {}

    int size() const { return size_; }
    int partner(int v) const { return partner_[v]; }
    bool is_matched(int v) const { return partner_[v] >= 0; }
    int vertex_count() const { return static_cast<int>(partner_.size()); }

    /// Adds (u,v) as a matched pair; both must be currently unmatched.
    void match(int u, int v);
    /// Removes the pair containing u.
    void unmatch(int u);

    /// Wraps a raw partner map without checking anything; pair with
    /// validate_matching when loading untrusted data.
    static Matching from_partners(std::vector<int> partners);

private:
    std::vector<int> partner_;
    int size_ = 0;
};

struct MatchingViolation {
    std::string message;
    int u = -1;
    int v = -1;
};

/// nullopt when m satisfies every matching invariant against g, otherwise
/// the first violated invariant with witness vertices.
std::optional<MatchingViolation> validate_matching(const Graph& g, const Matching& m);

/// Vertex sequence plus one matched/unmatched flag per step.
struct AlternatingPath {
    std::vector<int> vertices;
    std::vector<bool> matched;  // matched[i] describes edge (vertices[i], vertices[i+1])

    int length() const { return static_cast<int>(matched.size()); }
};

/// Checks the AlternatingPath invariants: consecutive vertices adjacent,
/// parities strictly alternating, vertices pairwise distinct, and the
/// matched flags consistent with m.
bool is_valid_alternating_path(const Graph& g, const Matching& m, const AlternatingPath& p);

/// True iff p is an augmenting path: both endpoints unmatched and the first
/// and last edges unmatched (odd length). Assumes p satisfies the
/// AlternatingPath invariants.
bool is_augmenting(const Graph& g, const Matching& m, const AlternatingPath& p);

/// Flips matched/unmatched along p. Requires is_augmenting(g, m, p);
/// grows the matching by exactly one edge.
void augment(Matching& m, const AlternatingPath& p);

/// Greedy maximal matching in adjacency order (warm-start option).
Matching greedy_maximal_matching(const Graph& g);

/// Matching output format: `<size>` line, then one `u v` per matched edge,
/// 0-based, u < v, lexicographically sorted. Byte-exact for golden files.
void write_matching(const Matching& m, std::ostream& out);

/// Reads the write_matching format back against g; validates.
Matching parse_matching(std::istream& in, const Graph& g);

/// Seeded Erdos-Renyi graph with exactly m distinct edges (duplicates and
/// self-loops rejection-sampled).
Graph random_graph(int n, int m, std::mt19937_64& rng);

/// Random maximal matching: greedy over a shuffled edge order.
Matching random_maximal_matching(const Graph& g, std::mt19937_64& rng);

}  // namespace mv
