#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "zfc/matching.hpp"
#include "zfc/pattern.hpp"
#include "zfc/rational_matrix.hpp"
#include "zfc/zero_forcing.hpp"

namespace zfc {

/// Networked system x' = Ax + Bu: interaction graph, the rule its pattern
/// follows, and the input vertices (each driven by its own input column).
struct SystemSpec {
    DirectedGraph graph;
    GraphKind kind = GraphKind::LoopDirected;
    VertexSet inputs;
};

/// Verdict of one strong structural controllability test with the evidence
/// that produced it. Which evidence fields are set depends on `method`:
/// "zero-forcing" fills the two force lists, "matching" the two matchings,
/// "simple-zero-forcing" the single propagation. `failure` names the failed
/// condition and is empty when the verdict is true.
struct StrongControllabilityReport {
    bool verdict = false;
    std::string method;
    VertexSet inputs;
    std::string failure;

    // zero-forcing / simple-zero-forcing
    std::optional<PropagationResult> propagation;
    std::optional<ForceList> loop_free_forces;

    // matching; row ids refer to the original vertices
    std::optional<Matching> pattern_matching;
    std::optional<Matching> crossed_matching;
};

struct MinInputSet {
    int size = 0;
    VertexSet witness;
    std::string method;  // "tree", "simple-zero-forcing" or "exhaustive"
};

// Input set obtained from a maximum constrained self-less matching of A_x,
// next to the true minimum. Valid but not necessarily minimum for undamped
// systems.
struct CorollaryGap {
    VertexSet corollary_set;
    Matching self_less_matching;
    int minimum_size = 0;
};

struct KalmanReport {
    int samples = 0;
    std::uint64_t seed = 0;
    int controllable = 0;
    bool strong_verdict = false;
    std::optional<std::pair<RationalMatrix, RationalMatrix>> first_uncontrollable;
};

// Range used when sampling realizations: Star entries in [-9, 9] \ {0}, Free
// entries in [-9, 9].
inline constexpr int kSampleMagnitude = 9;

// B(S): n x |S| with a Star at (v_j, j) for the inputs v_1 < ... < v_m.
// Throws InputError for an empty S or a vertex outside 1..n.
Pattern input_pattern(int n, const VertexSet& inputs);

/// Zero forcing test for a loop directed system: S must force G, and must
/// force G_x through a chronological list in which no looped vertex of G
/// forces itself.
StrongControllabilityReport strong_zf(const SystemSpec& spec);

/// Matching test for a loop directed system with m = |S| inputs: A(S|.) needs
/// a constrained (n-m)-matching and A_x(S|.) a constrained (n-m)-matching that
/// avoids the diagonal cells of looped vertices.
StrongControllabilityReport strong_matching(const SystemSpec& spec);

// Simple directed system (free diagonal): strongly controllable iff S is a
// zero forcing set under the simple rule. Throws InputError on loops.
StrongControllabilityReport strong_simple(const DirectedGraph& simple_graph, const VertexSet& inputs);

// Dispatches on spec.kind: strong_zf for loop graphs, strong_simple otherwise.
StrongControllabilityReport strong_verdict(const SystemSpec& spec);

/// Smallest input set. Self-damped loop graphs reduce to a minimum zero
/// forcing set of the loop-free graph (the tree algorithm when that graph is
/// a symmetric tree), simple graphs likewise; every other loop graph is
/// searched exhaustively in increasing size, lexicographic within a size.
MinInputSet min_input_set(const DirectedGraph& g, GraphKind kind);

// Unmatched rows of the maximum constrained self-less matching of A_x.
VertexSet corollary_input_set(const DirectedGraph& g, Matching* matching_out = nullptr);

// Corollary input set next to the exhaustive minimum. Throws InputError when
// g carries loops.
CorollaryGap corollary_gap(const DirectedGraph& g);

// Deterministic in `seed`. See kSampleMagnitude for the value ranges.
RationalMatrix sample_realization(const Pattern& p, std::uint64_t seed);

// Controllability matrix [B AB ... A^{n-1}B].
RationalMatrix controllability_matrix(const RationalMatrix& a, const RationalMatrix& b);

// Exact rank of the controllability matrix. Throws InputError on shapes.
int kalman_rank(const RationalMatrix& a, const RationalMatrix& b);

/// Draws `samples` realizations of (A, B(S)) and counts the controllable
/// ones. Sample i uses a seed derived from (seed, i). When the structural
/// verdict is true every sample must be controllable; otherwise this throws
/// ConsistencyError.
KalmanReport kalman_trial(const SystemSpec& spec, int samples, std::uint64_t seed);

}  // namespace zfc
