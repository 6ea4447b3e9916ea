// Maximum-cardinality matching in general graphs: solve, analyze the phase
// structure, verify against the brute-force oracle, and benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mv/augmenter.hpp"
#include "mv/graph.hpp"
#include "mv/oracle.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;

mv::GraphFormat parse_format(const std::string& name) {
    if (name == "dimacs") return mv::GraphFormat::dimacs;
    if (name == "edgelist") return mv::GraphFormat::edge_list;
    return mv::GraphFormat::auto_detect;
}

mv::Graph read_graph(const std::string& path, mv::GraphFormat format) {
    if (path == "-") return mv::parse_graph(std::cin, format);
    std::ifstream in(path);
    if (!in) throw mv::parse_error(0, "cannot open input file: " + path);
    return mv::parse_graph(in, format);
}

const char* trace_kind(mv::TraceEvent::Kind kind) {
    switch (kind) {
        case mv::TraceEvent::Kind::advance: return "advance";
        case mv::TraceEvent::Kind::retreat: return "retreat";
        case mv::TraceEvent::Kind::meet: return "meet";
        case mv::TraceEvent::Kind::bottleneck: return "bottleneck";
        case mv::TraceEvent::Kind::free_pair: return "freepair";
    }
    return "?";
}

mv::TraceSink stderr_trace_sink() {
    return [](const mv::TraceEvent& ev) {
        std::cerr << trace_kind(ev.kind) << ' '
                  << (ev.color == mv::DdfsColor::red ? "red" : "green") << ' ' << ev.vertex
                  << ' ' << ev.layer << '\n';
    };
}

int cmd_match(const std::string& input, mv::GraphFormat format, bool warm_start, bool trace,
              const std::string& output) {
    mv::Graph g = read_graph(input, format);
    mv::TraceSink sink;
    if (trace) sink = stderr_trace_sink();
    mv::Matching initial = warm_start ? mv::greedy_maximal_matching(g)
                                      : mv::Matching(g.vertex_count());
    auto result = mv::maximum_matching(g, initial, {}, trace ? &sink : nullptr);
    if (output == "json") {
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (result.matching.partner(v) > v) pairs.emplace_back(v, result.matching.partner(v));
        std::sort(pairs.begin(), pairs.end());
        std::cout << "{\"edges\":[";
        for (size_t i = 0; i < pairs.size(); ++i)
            std::cout << (i ? "," : "") << '[' << pairs[i].first << ',' << pairs[i].second
                      << ']';
        std::cout << "],\"phases\":" << result.phases.size()
                  << ",\"size\":" << result.matching.size() << "}\n";
    } else {
        mv::write_matching(result.matching, std::cout);
    }
    return 0;
}

int cmd_analyze(const std::string& input, mv::GraphFormat format,
                const std::string& matching_path, bool trace) {
    mv::Graph g = read_graph(input, format);
    mv::Matching m(g.vertex_count());
    if (!matching_path.empty()) {
        std::ifstream in(matching_path);
        if (!in) throw mv::parse_error(0, "cannot open matching file: " + matching_path);
        m = mv::parse_matching(in, g);
    } else {
        m = mv::maximum_matching(g).matching;
    }
    mv::TraceSink sink;
    if (trace) sink = stderr_trace_sink();
    auto analysis = mv::analyze_phase(g, m, {}, trace ? &sink : nullptr);
    std::cout << "levels\n";
    mv::level_dump(analysis.state, std::cout);
    std::cout << "petals\n";
    mv::petal_dump(analysis.forest, std::cout);
    std::cout << "bridges\n";
    mv::bridge_dump(g, analysis.state, std::cout);
    return 0;
}

// One randomly generated instance per trial; any disagreement between the
// engine and the oracle is reported with the trial's reproduction key.
// inject_fault deliberately corrupts the first size comparison so the
// harness's failure path can be exercised end to end.
int cmd_verify(int count, int max_n, std::uint64_t seed, bool inject_fault) {
    constexpr int kOracleBound = 14;
    if (max_n > kOracleBound) {
        std::cerr << "verify: --max-n " << max_n << " exceeds the oracle guard ("
                  << kOracleBound << ")\n";
        return 2;
    }
    for (int trial = 0; trial < count; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_n - 1)));
        int max_m = n * (n - 1) / 2;
        int edges = max_m > 0 ? static_cast<int>(rng() % (max_m + 1)) : 0;
        mv::Graph g = mv::random_graph(n, edges, rng);
        auto fail = [&](const std::string& what) {
            std::cerr << "verify: mismatch at trial " << trial << " (seed " << seed
                      << ", n=" << n << ", m=" << edges << "): " << what << '\n';
            std::ostringstream os;
            mv::serialize_edge_list(g, os);
            std::cerr << os.str();
            return 1;
        };

        // Matching size against the exhaustive maximum.
        auto result = mv::maximum_matching(g);
        int expected_size = mv::oracle::max_matching_exhaustive(g);
        if (inject_fault && trial == 0) ++expected_size;
        if (result.matching.size() != expected_size)
            return fail("matching size " + std::to_string(result.matching.size()) +
                        ", exhaustive maximum " + std::to_string(expected_size));
        if (auto violation = mv::validate_matching(g, result.matching))
            return fail("output matching invalid: " + violation->message);

        // Level computation against the oracle, on a random maximal matching.
        mv::Matching m = mv::random_maximal_matching(g, rng);
        auto profile = mv::oracle::full_profile(g, m);
        auto analysis = mv::analyze_phase(g, m);
        for (int v = 0; v < n; ++v) {
            if (analysis.state.minlevel(v) != profile.minlevel(v))
                return fail("minlevel(" + std::to_string(v) + ")");
            mv::Level t = profile.tenacity(v);
            if (mv::level_finite(t) && t <= profile.l_m) {
                if (analysis.state.evenlevel[v] != profile.evenlevel[v] ||
                    analysis.state.oddlevel[v] != profile.oddlevel[v])
                    return fail("levels of tenacity-" + std::to_string(t) + " vertex " +
                                std::to_string(v));
            }
        }

        // bud* fibers against oracle bases, at each tenacity's search level.
        if (profile.base_violations.empty()) {
            std::vector<mv::Level> tenacities;
            for (int v = 0; v < n; ++v) {
                mv::Level t = profile.tenacity(v);
                if (mv::level_finite(t) && t < profile.l_m) tenacities.push_back(t);
            }
            std::sort(tenacities.begin(), tenacities.end());
            tenacities.erase(std::unique(tenacities.begin(), tenacities.end()),
                             tenacities.end());
            for (mv::Level t : tenacities) {
                mv::LevelState s = mv::init_phase(g, m);
                mv::PetalForest pf;
                pf.reset(n);
                mv::DdfsRunner runner;
                for (int level = 0; level <= (t - 1) / 2; ++level) {
                    mv::run_min(g, m, s, level);
                    mv::run_max(g, m, s, pf, level, mv::AugmentSink{}, runner);
                }
                for (int v = 0; v < n; ++v)
                    if (profile.tenacity(v) == t && pf.bud_star(v) != profile.base[v])
                        return fail("bud*(" + std::to_string(v) + ") != base at tenacity " +
                                    std::to_string(t));
            }
        }

        // Structural theorems, including the blossom definition equivalence.
        auto report = mv::oracle::check_structure(profile, g, m);
        if (!report.ok()) return fail("structure: " + report.failures.front());
    }
    std::cout << "verify: " << count << " instances (max n " << max_n << ", seed " << seed
              << ") agree with the oracle\n";
    return 0;
}

int cmd_bench(int n, long long m, int trials, std::uint64_t seed) {
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        int edges = static_cast<int>(std::min(m, max_m));
        mv::Graph g = mv::random_graph(n, edges, rng);
        auto start = std::chrono::steady_clock::now();
        auto result = mv::maximum_matching(g);
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        long long touches = 0, steps = 0;
        for (const auto& phase : result.phases) {
            touches += phase.min_edge_touches;
            steps += phase.ddfs_steps;
        }
        std::cout << "{\"ddfs_steps\":" << steps << ",\"m\":" << edges
                  << ",\"matching_size\":" << result.matching.size()
                  << ",\"min_touches\":" << touches << ",\"n\":" << n
                  << ",\"phases\":" << result.phases.size() << ",\"seed\":" << seed
                  << ",\"time_ms\":" << static_cast<long long>(ms * 1000) / 1000.0
                  << ",\"trial\":" << trial << "}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-cardinality matching in general graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format_name = "auto";
    std::string output = "text";
    std::string matching_path;
    bool warm_start = false;
    bool trace = false;
    std::uint64_t seed = kDefaultSeed;
    int count = 100, max_n = 10;
    bool inject_fault = false;
    int bench_n = 1000, bench_trials = 3;
    long long bench_m = 5000;

    auto* match = app.add_subcommand("match", "compute a maximum matching");
    match->add_option("input", input, "input file, or - for stdin");
    match->add_option("--format", format_name, "auto|dimacs|edgelist")->default_str("auto");
    match->add_flag("--warm-start", warm_start, "start from a greedy maximal matching");
    match->add_flag("--trace", trace, "emit the search trace on stderr");
    match->add_option("--output", output, "text|json")->default_str("text");

    auto* analyze = app.add_subcommand("analyze", "dump levels, petals and bridges");
    analyze->add_option("input", input, "input file, or - for stdin");
    analyze->add_option("--format", format_name, "auto|dimacs|edgelist")->default_str("auto");
    analyze->add_option("--matching", matching_path,
                        "analyze against this matching instead of the final one");
    analyze->add_flag("--trace", trace, "emit the search trace on stderr");

    auto* verify = app.add_subcommand("verify", "cross-check the engine against the oracle");
    verify->add_option("--count", count, "number of random instances")->default_str("100");
    verify->add_option("--max-n", max_n, "largest vertex count")->default_str("10");
    verify->add_option("--seed", seed, "base seed");
    verify->add_flag("--inject-fault", inject_fault, "corrupt one comparison (harness self-test)")
        ->group("");

    auto* bench = app.add_subcommand("bench", "run timed trials on random graphs");
    bench->add_option("--n", bench_n, "vertex count")->default_str("1000");
    bench->add_option("--m", bench_m, "edge count")->default_str("5000");
    bench->add_option("--trials", bench_trials, "number of trials")->default_str("3");
    bench->add_option("--seed", seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (match->parsed())
            return cmd_match(input, parse_format(format_name), warm_start, trace, output);
        if (analyze->parsed())
            return cmd_analyze(input, parse_format(format_name), matching_path, trace);
        if (verify->parsed()) return cmd_verify(count, max_n, seed, inject_fault);
        if (bench->parsed()) return cmd_bench(bench_n, bench_m, bench_trials, seed);
    } catch (const mv::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
