#pragma once

#include <cstddef>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace zfc {

// Vertices are identified by 1..n everywhere in the public API.
using Vertex = int;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Selects the color change rule. SimpleDirected graphs must not carry loops.
enum class GraphKind { SimpleDirected, LoopDirected };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

/// Directed graph on vertices 1..n. An edge (u, v) points from u to v; loops
/// (u, u) are allowed. Immutable after construction.
class DirectedGraph {
public:
    DirectedGraph() = default;
    // Throws InputError on out-of-range endpoints or duplicate edges.
    DirectedGraph(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(Vertex from, Vertex to) const;
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v - 1]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v - 1]; }

    VertexSet loop_vertices() const;
    bool has_loop(Vertex v) const { return has_edge(v, v); }
    bool has_loops() const;
    // Every vertex carries a loop (vacuously true for n = 0).
    bool is_self_damped() const;
    // Every edge (u, v) with u != v is paired with (v, u).
    bool is_symmetric() const;

    bool contains(Vertex v) const { return v >= 1 && v <= n_; }

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<char> adjacency_;  // row-major n x n, [from][to]
};

DirectedGraph strip_loops(const DirectedGraph& g);
DirectedGraph add_all_loops(const DirectedGraph& g);

// Builds the symmetric directed graph of an undirected edge list.
DirectedGraph from_undirected(int n, const std::vector<Edge>& edges);

// Throws InputError when `kind` is SimpleDirected and g carries a loop.
void require_kind(const DirectedGraph& g, GraphKind kind);

// Throws InputError unless every vertex of s lies in 1..g.size().
void require_vertices(const DirectedGraph& g, const VertexSet& s);

}  // namespace zfc
