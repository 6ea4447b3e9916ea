#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mv/graph.hpp"
#include "mv/levels.hpp"

// Brute-force ground truth for the matching engine. Everything here is
// deliberately exponential with hard instance-size guards; nothing in this
// namespace may depend on the engine modules.

namespace mv::oracle {

class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    int max_n = 14;
    long long path_budget = 80'000'000;  // total path extensions across all passes
};

enum class EdgeClass { prop, bridge };

struct OracleBlossom {
    int base;
    Level tenacity;
    std::vector<int> members;      // recursive definition
    std::vector<int> members_alt;  // base_{>t} definition
    int depth;
};

struct OracleProfile {
    int n = 0;
    std::vector<Level> evenlevel;
    std::vector<Level> oddlevel;
    Level l_m = kInfLevel;

    std::vector<Level> edge_tenacity;
    std::vector<EdgeClass> edge_class;
    std::vector<std::vector<int>> bridge_support;  // per edge, tenacity <= l_m bridges only

    // F(p,v) over all evenlevel(v)/oddlevel(v) paths, collected as a set.
    std::vector<std::vector<int>> f_sets;
    std::vector<int> base;  // -1 when undefined (t(v) >= l_m or no finite level)
    std::vector<std::string> base_violations;

    std::vector<OracleBlossom> blossoms;

    Level tenacity(int v) const { return level_add(evenlevel[v], oddlevel[v]); }
    Level minlevel(int v) const { return level_min(evenlevel[v], oddlevel[v]); }
    Level maxlevel(int v) const { return level_max(evenlevel[v], oddlevel[v]); }
    bool outer(int v) const { return evenlevel[v] < oddlevel[v]; }

    /// base^1(v), base^2(v), ... while defined.
    std::vector<int> base_chain(int v) const;
    /// True iff some iterated base of v is an unmatched vertex.
    bool all_bases_defined(int v, const Matching& m) const;
};

/// Exhaustive simple-alternating-path search from every unmatched vertex;
/// fills evenlevel/oddlevel and l_m. Throws limit_error past the guards.
OracleProfile enumerate_levels(const Graph& g, const Matching& m, const OracleOptions& opts = {});

/// Fills edge tenacities, prop/bridge classes, and bridge supports.
void classify_edges(OracleProfile& p, const Graph& g, const Matching& m,
                    const OracleOptions& opts = {});

/// Fills F-sets and bases; a non-singleton F-set for a vertex of tenacity
/// < l_m is recorded in base_violations (it would falsify the base theorem).
void compute_bases(OracleProfile& p, const Graph& g, const Matching& m,
                   const OracleOptions& opts = {});

/// Builds the blossom family under both definitions and nesting depths.
void build_blossoms(OracleProfile& p);

/// enumerate_levels + classify_edges + compute_bases + build_blossoms.
OracleProfile full_profile(const Graph& g, const Matching& m, const OracleOptions& opts = {});

struct StructureReport {
    std::vector<std::string> failures;
    std::vector<std::string> skipped;  // vertices excluded per the chain-undefined corner
    bool ok() const { return failures.empty(); }
};

/// Mechanical verification of the structural facts the level/petal machinery
/// relies on: limited BFS-honesty, base decomposition, blossom laminarity and
/// path confinement, iterated-bases-on-path, one bridge per maxlevel path,
/// equality of the two blossom definitions, and the matched-edge/bridge
/// tenacity lemmas. Returns the first few counterexamples on failure.
StructureReport check_structure(const OracleProfile& p, const Graph& g, const Matching& m,
                                const OracleOptions& opts = {});

/// Exact maximum matching size by dynamic programming over vertex subsets.
/// Guarded by max_n (default 22).
int max_matching_exhaustive(const Graph& g, int max_n = 22);

/// Independent blossom-contraction reference matcher (shares no code with
/// the engine); usable up to a few hundred vertices.
int blossom_reference_matching(const Graph& g);

/// All minimum-length augmenting paths w.r.t. m (empty when none exist).
std::vector<AlternatingPath> enumerate_min_augmenting_paths(const Graph& g, const Matching& m,
                                                            const OracleOptions& opts = {});

/// Minimum even/odd alternating path lengths from b to every vertex where the
/// path starts with an unmatched edge (the evenlevel(b;v)/oddlevel(b;v)
/// quantities). paths_out, when non-null, receives every minimal such path.
struct BaseLevels {
    std::vector<Level> even;
    std::vector<Level> odd;
};
BaseLevels levels_from_base(const Graph& g, const Matching& m, int b,
                            std::vector<std::vector<int>>* minimal_paths_out = nullptr,
                            const OracleOptions& opts = {});

/// One line per vertex: `v evenlevel oddlevel tenacity` with `inf` for
/// infinity, sorted by vertex id. Mirrors the engine's analyze dump.
void profile_dump(const OracleProfile& p, std::ostream& out);

}  // namespace mv::oracle
