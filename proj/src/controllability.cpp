#include "zfc/controllability.hpp"

#include <numeric>
#include <random>

#include "zfc/error.hpp"

namespace zfc {

namespace {

void require_loop_kind(const SystemSpec& spec) {
    if (spec.kind != GraphKind::LoopDirected) {
        throw InputError("this test applies to loop directed systems only");
    }
    require_vertices(spec.graph, spec.inputs);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RationalMatrix realization_of_inputs(int n, const VertexSet& inputs, std::uint64_t seed) {
    return sample_realization(input_pattern(n, inputs), seed);
}

}  // namespace

Pattern input_pattern(int n, const VertexSet& inputs) {
    if (inputs.empty()) throw InputError("input set is empty");
    Pattern p(n, static_cast<int>(inputs.size()));
    int column = 0;
    for (Vertex v : inputs) {
        if (v < 1 || v > n) throw InputError("input vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        p.set(v, ++column, Entry::Star);
    }
    return p;
}

StrongControllabilityReport strong_zf(const SystemSpec& spec) {
    require_loop_kind(spec);
    const DirectedGraph& g = spec.graph;
    StrongControllabilityReport report;
    report.method = "zero-forcing";
    report.inputs = spec.inputs;

    report.propagation = propagate(g, GraphKind::LoopDirected, spec.inputs);
    report.loop_free_forces =
        find_force_list_avoiding(add_all_loops(g), GraphKind::LoopDirected, spec.inputs, g.loop_vertices());

    if (spec.inputs.empty() && g.size() > 0) {
        report.failure = "input set is empty";
    } else if (!report.propagation->complete) {
        report.failure = "input set is not a zero forcing set of G";
    } else if (!report.loop_free_forces) {
        report.failure = "no chronological list of forces in G_x avoids self-forces of looped vertices";
    }
    report.verdict = report.failure.empty();
    return report;
}

StrongControllabilityReport strong_matching(const SystemSpec& spec) {
    require_loop_kind(spec);
    const DirectedGraph& g = spec.graph;
    const int n = g.size();
    const int target = n - static_cast<int>(spec.inputs.size());

    StrongControllabilityReport report;
    report.method = "matching";
    report.inputs = spec.inputs;

    // Rows of A(S|.) renumber the kept vertices; map them back afterwards.
    std::vector<Vertex> kept;
    std::vector<int> new_row(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (spec.inputs.contains(v)) continue;
        kept.push_back(v);
        new_row[v] = static_cast<int>(kept.size());
    }
    auto to_original = [&](const Matching& m) {
        Matching out;
        for (const auto& [r, c] : m) out.push_back({kept[r - 1], c});
        return canonical(std::move(out));
    };

    const Pattern a = to_pattern(g);
    const auto plain = max_constrained_matching_avoiding(to_bipartite(delete_rows(a, spec.inputs)), {}, target);

    std::set<BiEdge> forbidden;
    for (Vertex v : g.loop_vertices()) {
        if (new_row[v] != 0) forbidden.insert({new_row[v], v});
    }
    const auto crossed =
        max_constrained_matching_avoiding(to_bipartite(delete_rows(star_diagonal(a), spec.inputs)), forbidden, target);

    report.pattern_matching = to_original(plain.witness);
    report.crossed_matching = to_original(crossed.witness);
    if (spec.inputs.empty() && n > 0) {
        report.failure = "input set is empty";
    } else if (plain.size < target) {
        report.failure = "A(S|.) has no constrained (n-m)-matching (maximum " + std::to_string(plain.size) + ")";
    } else if (crossed.size < target) {
        report.failure = "A_x(S|.) has no constrained (n-m)-matching avoiding looped diagonal cells (maximum " +
                         std::to_string(crossed.size) + ")";
    }
    report.verdict = report.failure.empty();
    return report;
}

StrongControllabilityReport strong_simple(const DirectedGraph& simple_graph, const VertexSet& inputs) {
    if (simple_graph.has_loops()) throw InputError("a simple directed system cannot carry loops");
    require_vertices(simple_graph, inputs);
    StrongControllabilityReport report;
    report.method = "simple-zero-forcing";
    report.inputs = inputs;
    report.propagation = propagate(simple_graph, GraphKind::SimpleDirected, inputs);
    if (inputs.empty() && simple_graph.size() > 0) {
        report.failure = "input set is empty";
    } else if (!report.propagation->complete) {
        report.failure = "input set is not a zero forcing set of the simple graph";
    }
    report.verdict = report.failure.empty();
    return report;
}

StrongControllabilityReport strong_verdict(const SystemSpec& spec) {
    if (spec.kind == GraphKind::SimpleDirected) return strong_simple(spec.graph, spec.inputs);
    return strong_zf(spec);
}

MinInputSet min_input_set(const DirectedGraph& g, GraphKind kind) {
    require_kind(g, kind);
    const bool reduces_to_simple = kind == GraphKind::SimpleDirected || g.is_self_damped();
    if (reduces_to_simple) {
        const DirectedGraph simple = strip_loops(g);
        if (g.size() > 0 && is_symmetric_tree(simple)) {
            const auto tree = tree_min_zero_forcing_set(simple);
            return {tree.size, tree.witness, "tree"};
        }
        const auto exact = zero_forcing_number(simple, GraphKind::SimpleDirected);
        return {exact.size, exact.witness, "simple-zero-forcing"};
    }

    const int n = g.size();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            SystemSpec spec{g, GraphKind::LoopDirected, VertexSet(idx.begin(), idx.end())};
            if (strong_zf(spec).verdict) return {k, spec.inputs, "exhaustive"};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i + 1) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // n = 0: nothing to control.
    return {0, {}, "exhaustive"};
}

VertexSet corollary_input_set(const DirectedGraph& g, Matching* matching_out) {
    VertexSet all;
    for (Vertex v = 1; v <= g.size(); ++v) all.insert(v);
    const auto best = max_constrained_matching(to_bipartite(star_diagonal(to_pattern(g))), all);
    VertexSet unmatched = all;
    for (const auto& [row, col] : best.witness) unmatched.erase(row);
    if (matching_out) *matching_out = best.witness;
    return unmatched;
}

CorollaryGap corollary_gap(const DirectedGraph& g) {
    if (g.has_loops()) throw InputError("the self-less matching corollary applies to undamped systems (no loops)");
    CorollaryGap gap;
    gap.corollary_set = corollary_input_set(g, &gap.self_less_matching);
    gap.minimum_size = min_input_set(g, GraphKind::LoopDirected).size;
    return gap;
}

RationalMatrix sample_realization(const Pattern& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t kNonzero = 2 * kSampleMagnitude;
    constexpr std::uint64_t kAny = 2 * kSampleMagnitude + 1;
    RationalMatrix m(p.rows(), p.cols());
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.cols(); ++j) {
            long value = 0;
            switch (p.at(i, j)) {
                case Entry::Zero: break;
                case Entry::Star: {
                    const auto draw = static_cast<long>(rng() % kNonzero);
                    value = draw < kSampleMagnitude ? draw - kSampleMagnitude : draw - kSampleMagnitude + 1;
                    break;
                }
                case Entry::Free: value = static_cast<long>(rng() % kAny) - kSampleMagnitude; break;
            }
            m(i - 1, j - 1) = value;
        }
    }
    return m;
}

RationalMatrix controllability_matrix(const RationalMatrix& a, const RationalMatrix& b) {
    const int n = a.rows();
    if (a.cols() != n) throw InputError("state matrix must be square");
    if (b.rows() != n) throw InputError("input matrix must have as many rows as the state matrix");
    const int m = b.cols();
    RationalMatrix c(n, n * m);
    RationalMatrix block = b;
    for (int power = 0; power < n; ++power) {
        if (power > 0) block = multiply(a, block);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) c(i, power * m + j) = block(i, j);
        }
    }
    return c;
}

int kalman_rank(const RationalMatrix& a, const RationalMatrix& b) {
    return rank(controllability_matrix(a, b));
}

KalmanReport kalman_trial(const SystemSpec& spec, int samples, std::uint64_t seed) {
    if (samples < 0) throw InputError("sample count must be non-negative");
    require_kind(spec.graph, spec.kind);
    require_vertices(spec.graph, spec.inputs);
    KalmanReport report;
    report.seed = seed;
    const int n = spec.graph.size();
    report.strong_verdict = strong_verdict(spec).verdict;
    if (n == 0) return report;

    const Pattern state_pattern =
        spec.kind == GraphKind::LoopDirected ? to_pattern(spec.graph) : to_simple_pattern(spec.graph);
    // Surfaces an empty input set before sampling.
    input_pattern(n, spec.inputs);

    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
        RationalMatrix a = sample_realization(state_pattern, base);
        RationalMatrix b = realization_of_inputs(n, spec.inputs, splitmix64(base));
        if (kalman_rank(a, b) == n) {
            ++report.controllable;
        } else if (!report.first_uncontrollable) {
            report.first_uncontrollable.emplace(std::move(a), std::move(b));
        }
    }
    if (report.strong_verdict && report.controllable != report.samples) {
        const auto& [a, b] = *report.first_uncontrollable;
        throw ConsistencyError("structurally strongly controllable system has an uncontrollable realization:\nA =\n" +
                               a.to_text() + "B =\n" + b.to_text());
    }
    return report;
}

}  // namespace zfc
