#pragma once

#include <optional>
#include <set>
#include <vector>

#include "zfc/bipartite.hpp"
#include "zfc/zero_forcing.hpp"

namespace zfc {

// Set of (row, column) pairs with no shared endpoint, kept sorted by row.
using Matching = std::vector<BiEdge>;

// Sorts by row (the canonical output order).
Matching canonical(Matching m);

// Throws InputError unless every pair is an edge of b and no row or column
// repeats.
void require_matching(const BipartiteGraph& b, const Matching& m);

// Ordering (i_1, j_1), ..., (i_t, j_t) of a matching such that row i_k has no
// edge to column j_l whenever l < k.
using ConstrainedCertificate = std::vector<BiEdge>;

struct ConstrainedCheck {
    bool constrained = false;
    std::optional<ConstrainedCertificate> certificate;
};

/// Degree-one peeling on the subgraph induced by the matched rows and
/// columns: repeatedly take the smallest matched column with a single
/// remaining neighbor. Succeeds exactly when the matching is constrained and
/// then returns the triangular ordering.
std::optional<ConstrainedCertificate> peel_certificate(const BipartiteGraph& b, const Matching& m);

/// True when m is the only perfect matching of the subgraph induced by its
/// matched vertices, checked by searching for an m-alternating cycle.
bool is_unique_on_matched_vertices(const BipartiteGraph& b, const Matching& m);

/// A matching is constrained when no other matching covers the same vertices.
/// Runs both methods above and throws ConsistencyError if they disagree.
ConstrainedCheck is_constrained(const BipartiteGraph& b, const Matching& m);

struct MaxConstrainedMatching {
    int size = 0;
    Matching witness;
};

/// Exact maximum constrained matching that uses no edge in `forbidden_edges`.
/// Forbidden edges still count when deciding whether a matching is
/// constrained. Branch and bound over the edges in (row, column) order,
/// include-first, pruned by the maximum unconstrained matching of what
/// remains; the witness is the lexicographically smallest maximum one. The
/// search stops early once `stop_at` is reached.
MaxConstrainedMatching max_constrained_matching_avoiding(const BipartiteGraph& b,
                                                         const std::set<BiEdge>& forbidden_edges,
                                                         std::optional<int> stop_at = std::nullopt);

// Forbids the diagonal edges (i, i) for i in `forbidden_diagonal`. All
// indices gives the self-less variant.
MaxConstrainedMatching max_constrained_matching(const BipartiteGraph& b, const VertexSet& forbidden_diagonal = {});

// Size of a maximum (unconstrained) matching, by augmenting paths.
int maximum_matching_size(const BipartiteGraph& b);

// Triangle number of a loop directed graph: the maximum constrained matching
// size of its bipartite graph B_G.
int triangle_number(const DirectedGraph& g);

struct MatchedZeroForcingSet {
    VertexSet set;
    ForceList forces;
};

/// The unmatched rows of a constrained matching of B_G form a zero forcing
/// set of g (loop rule); the certificate ordering read as column -> row is a
/// chronological list of forces. Throws InputError if m is not constrained.
MatchedZeroForcingSet matching_to_zfs(const DirectedGraph& g, const Matching& m);

/// Inverse direction: a complete chronological list of forces from s under
/// the loop rule yields the constrained matching {(forced, forcer)}.
/// Throws InputError if the list does not replay to all of g.
Matching zfs_to_matching(const DirectedGraph& g, const VertexSet& s, const ForceList& forces);

}  // namespace zfc
