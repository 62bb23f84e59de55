// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zfc/cli.hpp"
#include "zfc/controllability.hpp"
#include "zfc/io.hpp"

using namespace zfc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (condition) return;
        if (ok) detail = what;
        ok = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SystemSpec loop_system(const DirectedGraph& g, VertexSet s) { return {g, GraphKind::LoopDirected, std::move(s)}; }

std::vector<VertexSet> nonempty_subsets(int n) {
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) out.push_back(oracle::subset_of_mask(mask));
    return out;
}

// Strong-verdict-true cases gathered by criteria 1, 2, 5 and 6 for the
// sampling check in criterion 7.
std::vector<SystemSpec> g_true_cases;

void record_if_true(const SystemSpec& spec, bool verdict) {
    if (verdict) g_true_cases.push_back(spec);
}

Outcome looped_example() {
    Outcome o;
    const auto loop = strong_zf(loop_system(fixtures::loop_example(), {1}));
    const auto simple = strong_simple(fixtures::simple_example(), {1});
    o.expect(loop.verdict, "looped system not strongly controllable from {1}");
    o.expect(!simple.verdict, "simple system reported strongly controllable from {1}");
    record_if_true(loop_system(fixtures::loop_example(), {1}), loop.verdict);
    return o;
}

Outcome undamped_counterexample() {
    Outcome o;
    const auto crossed = bipartite_of_graph(add_all_loops(fixtures::undamped_example()));
    int self_less_pairs = 0;
    for (const auto& m : oracle::all_matchings(crossed)) {
        if (m.size() != 2) continue;
        if (std::any_of(m.begin(), m.end(), [](const BiEdge& e) { return e.first == e.second; })) continue;
        ++self_less_pairs;
        o.expect(!is_constrained(crossed, m).constrained, "a self-less 2-matching is constrained");
    }
    o.expect(self_less_pairs == 3, "expected three self-less 2-matchings, found " + std::to_string(self_less_pairs));
    o.expect(max_constrained_matching(crossed, {1, 2, 3}).size == 1, "maximum self-less size is not 1");

    const auto spec = loop_system(fixtures::undamped_example(), {1});
    const bool zf = strong_zf(spec).verdict;
    o.expect(zf, "zero forcing test rejects {1}");
    o.expect(strong_matching(spec).verdict, "matching test rejects {1}");
    record_if_true(spec, zf);

    const auto gap = corollary_gap(fixtures::undamped_example());
    o.expect(gap.corollary_set.size() == 2 && gap.minimum_size == 1, "corollary set size or minimum differs");
    o.expect(strong_zf(loop_system(fixtures::undamped_example(), gap.corollary_set)).verdict,
             "corollary input set is not valid");
    return o;
}

Outcome triangle_identity() {
    Outcome o;
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 6);
        const int tri = triangle_number(g);
        const int z = zero_forcing_number(g, GraphKind::LoopDirected).size;
        o.expect(z == oracle::zero_forcing_number(g, GraphKind::LoopDirected), "Z differs from brute force");
        o.expect(tri + z == g.size(), "tri + Z != n on trial " + std::to_string(trial));
    }
    return o;
}

Outcome matching_bijection() {
    Outcome o;
    std::mt19937_64 rng(1002);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 5);
        const auto b = bipartite_of_graph(g);
        for (const auto& m : oracle::all_matchings(b)) {
            if (!oracle::is_constrained(b, m)) continue;
            const auto zfs = matching_to_zfs(g, m);
            const auto black = replay_forces(g, GraphKind::LoopDirected, zfs.set, zfs.forces);
            o.expect(black && static_cast<int>(black->size()) == g.size(), "force list does not replay");
            o.expect(zfs_to_matching(g, zfs.set, zfs.forces) == canonical(m), "round trip changed the matching");
        }
    }
    return o;
}

Outcome method_agreement() {
    Outcome o;
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 5);
        for (const auto& s : nonempty_subsets(g.size())) {
            const auto spec = loop_system(g, s);
            const bool zf = strong_zf(spec).verdict;
            o.expect(zf == strong_matching(spec).verdict, "verdicts disagree on trial " + std::to_string(trial));
            record_if_true(spec, zf);
        }
    }
    return o;
}

Outcome self_damped() {
    Outcome o;
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = add_all_loops(oracle::random_loop_digraph(rng, 5));
        const auto s_graph = strip_loops(g);
        for (const auto& s : nonempty_subsets(g.size())) {
            const bool zf = strong_zf(loop_system(g, s)).verdict;
            o.expect(zf == strong_simple(s_graph, s).verdict, "self-damped verdicts differ");
            record_if_true(loop_system(g, s), zf);
        }
        o.expect(min_input_set(g, GraphKind::LoopDirected).size ==
                     oracle::zero_forcing_number(s_graph, GraphKind::SimpleDirected),
                 "minimum input set size differs from Z of the loop-free graph");
    }
    return o;
}

Outcome kalman_soundness() {
    Outcome o;
    const RationalMatrix b{{1}, {0}, {0}};
    const RationalMatrix c{{1, -3, 18}, {0, 9, -27}, {0, -5, -21}};
    o.expect(controllability_matrix(fixtures::a1(), b) == c, "controllability matrix of A1 differs");
    o.expect(kalman_rank(fixtures::a1(), b) == 3, "rank of A1 controllability matrix is not 3");
    o.expect(!g_true_cases.empty(), "no strongly controllable cases collected");
    std::uint64_t seed = 7;
    for (const auto& spec : g_true_cases) {
        try {
            const auto report = kalman_trial(spec, 100, seed++);
            o.expect(report.controllable == 100, "uncontrollable sample for a strong verdict");
        } catch (const std::exception& e) {
            o.expect(false, e.what());
        }
    }
    o.detail = o.ok ? std::to_string(g_true_cases.size()) + " cases x 100 samples" : o.detail;
    return o;
}

Outcome minimum_rank_bound() {
    Outcome o;
    std::mt19937_64 rng(1005);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 6);
        const int bound = g.size() - oracle::zero_forcing_number(g, GraphKind::LoopDirected);
        for (int sample = 0; sample < 5; ++sample) {
            o.expect(rank(sample_realization(to_pattern(g), rng())) >= bound, "rank below n - Z");
        }
    }
    return o;
}

Outcome tree_algorithm() {
    Outcome o;
    std::mt19937_64 rng(1006);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto t = oracle::random_symmetric_tree(rng, n);
        const auto z = tree_min_zero_forcing_set(t);
        o.expect(z.size == oracle::zero_forcing_number(t, GraphKind::SimpleDirected), "tree Z differs");
        o.expect(oracle::is_zfs(t, GraphKind::SimpleDirected, z.witness), "tree witness does not force");
    }
    const auto big = oracle::random_symmetric_tree(rng, 1000);
    const auto start = Clock::now();
    const auto z = tree_min_zero_forcing_set(big);
    const double elapsed = seconds_since(start);
    o.expect(elapsed < 1.0, "n = 1000 took " + std::to_string(elapsed) + " s");
    o.expect(is_zero_forcing_set(big, GraphKind::SimpleDirected, z.witness), "n = 1000 witness does not force");
    return o;
}

std::string run_cli_capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str();
}

Outcome determinism() {
    Outcome o;
    const std::string dir = ZFC_TEST_DATA_DIR;
    const std::vector<std::vector<std::string>> commands{
        {"ctrl", "strong", "--graph", dir + "/looped3.json", "--input", "1", "--method", "both"},
        {"ctrl", "kalman", "--graph", dir + "/looped3.json", "--input", "1", "--seed", "7"},
        {"ctrl", "kalman", "--graph", dir + "/simple3.json", "--input", "1", "--seed", "7"},
        {"ctrl", "min-input", "--graph", dir + "/undamped3.json", "--corollary-gap"},
        {"match", "max", "--pattern", dir + "/undamped3_crossed.txt", "--self-less"},
        {"zf", "number", "--graph", dir + "/simple3.json"},
        {"tri", "--graph", dir + "/looped3.json"},
    };
    for (const auto& args : commands) {
        const auto first = run_cli_capture(args);
        o.expect(first.rfind("0\n", 0) == 0, "command failed: " + args[0] + " " + args[1]);
        for (int i = 0; i < 3; ++i) o.expect(run_cli_capture(args) == first, "output changed between runs");
    }
    std::mt19937_64 rng(1007);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_loop_digraph(rng, 5);
        const auto spec = loop_system(g, {1});
        o.expect(kalman_to_json(kalman_trial(spec, 20, 99)).dump() == kalman_to_json(kalman_trial(spec, 20, 99)).dump(),
                 "kalman report changed between runs");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "looped vs simple example verdicts", looped_example, 1.0},
        {2, "undamped counterexample and corrected corollary", undamped_counterexample, 1.0},
        {3, "tri(G) + Z(G) = n on 200 random loop digraphs", triangle_identity, 60.0},
        {4, "matching <-> zero forcing set bijection", matching_bijection, 0.0},
        {5, "zero forcing and matching tests agree", method_agreement, 0.0},
        {6, "self-damped equivalence and minimum input size", self_damped, 0.0},
        {7, "Kalman soundness of strong verdicts", kalman_soundness, 0.0},
        {8, "realization rank >= n - Z", minimum_rank_bound, 0.0},
        {9, "tree algorithm vs brute force, n = 1000 under 1 s", tree_algorithm, 0.0},
        {10, "byte-identical reports for fixed seeds", determinism, 0.0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (c.limit_seconds > 0 && elapsed >= c.limit_seconds) o.expect(false, "time limit exceeded");
        failed += o.ok ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, elapsed,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
