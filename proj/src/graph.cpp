#include "zfc/graph.hpp"

#include <algorithm>
#include <string>

#include "zfc/error.hpp"

namespace zfc {

std::string_view to_string(GraphKind kind) {
    return kind == GraphKind::SimpleDirected ? "simple-directed" : "loop-directed";
}

GraphKind parse_graph_kind(std::string_view text) {
    if (text == "simple-directed") return GraphKind::SimpleDirected;
    if (text == "loop-directed") return GraphKind::LoopDirected;
    throw InputError("unknown graph kind '" + std::string(text) +
                     "' (expected loop-directed or simple-directed)");
}

DirectedGraph::DirectedGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    const auto un = static_cast<std::size_t>(n);
    out_.resize(un);
    in_.resize(un);
    adjacency_.assign(un * un, 0);
    for (const auto& [u, v] : edges) {
        if (!contains(u) || !contains(v)) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside 1.." + std::to_string(n));
        }
        char& cell = adjacency_[static_cast<std::size_t>(u - 1) * un + static_cast<std::size_t>(v - 1)];
        if (cell) {
            throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        cell = 1;
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& [u, v] : edges_) {
        out_[u - 1].push_back(v);
        in_[v - 1].push_back(u);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool DirectedGraph::has_edge(Vertex from, Vertex to) const {
    if (!contains(from) || !contains(to)) return false;
    const auto un = static_cast<std::size_t>(n_);
    return adjacency_[static_cast<std::size_t>(from - 1) * un + static_cast<std::size_t>(to - 1)] != 0;
}

VertexSet DirectedGraph::loop_vertices() const {
    VertexSet loops;
    for (Vertex v = 1; v <= n_; ++v) {
        if (has_loop(v)) loops.insert(v);
    }
    return loops;
}

bool DirectedGraph::has_loops() const {
    for (Vertex v = 1; v <= n_; ++v) {
        if (has_loop(v)) return true;
    }
    return false;
}

bool DirectedGraph::is_self_damped() const {
    for (Vertex v = 1; v <= n_; ++v) {
        if (!has_loop(v)) return false;
    }
    return true;
}

bool DirectedGraph::is_symmetric() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [this](const Edge& e) { return has_edge(e.second, e.first); });
}

DirectedGraph strip_loops(const DirectedGraph& g) {
    std::vector<Edge> kept;
    std::copy_if(g.edges().begin(), g.edges().end(), std::back_inserter(kept),
                 [](const Edge& e) { return e.first != e.second; });
    return DirectedGraph(g.size(), kept);
}

DirectedGraph add_all_loops(const DirectedGraph& g) {
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 1; v <= g.size(); ++v) {
        if (!g.has_loop(v)) edges.push_back({v, v});
    }
    return DirectedGraph(g.size(), edges);
}

DirectedGraph from_undirected(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        directed.push_back({u, v});
        if (u != v) directed.push_back({v, u});
    }
    return DirectedGraph(n, directed);
}

void require_kind(const DirectedGraph& g, GraphKind kind) {
    if (kind == GraphKind::SimpleDirected && g.has_loops()) {
        throw InputError("a simple directed graph cannot carry loops");
    }
}

void require_vertices(const DirectedGraph& g, const VertexSet& s) {
    for (Vertex v : s) {
        if (!g.contains(v)) {
            throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.size()));
        }
    }
}

}  // namespace zfc
