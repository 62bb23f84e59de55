#pragma once

#include <optional>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

// One application of the color change rule: `forcer` turns `forced` black.
struct Force {
    Vertex forcer = 0;
    Vertex forced = 0;
    friend bool operator==(const Force&, const Force&) = default;
    friend auto operator<=>(const Force&, const Force&) = default;
};

// Chronological list of forces.
using ForceList = std::vector<Force>;

struct PropagationResult {
    VertexSet black;
    ForceList forces;
    bool complete = false;
};

struct ZeroForcingSet {
    int size = 0;
    VertexSet witness;
};

/// Applies the color change rule of `kind` until no force is possible.
///
/// Loop rule: a vertex (black or white) whose out-neighborhood, itself
/// included when it carries a loop, holds exactly one white vertex forces it.
/// Simple rule: only a black vertex with exactly one white out-neighbor forces.
///
/// Forcers are scanned in ascending id and the scan restarts at vertex 1
/// after every force, so the force list is reproducible. The final black set
/// does not depend on the order.
PropagationResult propagate(const DirectedGraph& g, GraphKind kind, const VertexSet& initial_black);

bool is_zero_forcing_set(const DirectedGraph& g, GraphKind kind, const VertexSet& s);

/// Exact zero forcing number by exhaustive search over subsets in increasing
/// size, lexicographic within a size. The witness is the first hit.
ZeroForcingSet zero_forcing_number(const DirectedGraph& g, GraphKind kind);

/// A complete chronological list of forces from `s` in which no vertex of
/// `forbidden_self` forces itself, or nullopt when none exists.
///
/// Allowed forces stay allowed as more vertices turn black, so the closure
/// under allowed forces is order-independent and a single deterministic
/// propagation decides existence.
std::optional<ForceList> find_force_list_avoiding(const DirectedGraph& g, GraphKind kind, const VertexSet& s,
                                                  const VertexSet& forbidden_self);

// Replays `forces` step by step from `initial_black` under the rule of
// `kind`. Returns the final black set, or nullopt if some step is not a legal
// force (premise fails, forced vertex already black, or unknown vertex).
std::optional<VertexSet> replay_forces(const DirectedGraph& g, GraphKind kind, const VertexSet& initial_black,
                                       const ForceList& forces);

// True when `t` has no loops, every edge is paired with its reverse, and the
// underlying undirected graph is a tree (n = 0 counts as a tree).
bool is_symmetric_tree(const DirectedGraph& t);

/// Minimum zero forcing set of a symmetric simple tree in O(n) time.
/// Builds a minimum path cover greedily from the leaves and returns the
/// smaller endpoint of every path. Throws InputError on any other input.
ZeroForcingSet tree_min_zero_forcing_set(const DirectedGraph& t);

// Minimum rank of a symmetric simple tree: n - Z(t).
int tree_min_rank(const DirectedGraph& t);

}  // namespace zfc
