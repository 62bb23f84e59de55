#include "zfc/bipartite.hpp"

#include <algorithm>
#include <string>

#include "zfc/error.hpp"

namespace zfc {

BipartiteGraph::BipartiteGraph(int rows, int cols, const std::vector<BiEdge>& edges)
    : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("bank sizes must be non-negative");
    row_adj_.resize(static_cast<std::size_t>(rows));
    col_adj_.resize(static_cast<std::size_t>(cols));
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    for (const auto& [r, c] : edges) {
        if (r < 1 || r > rows || c < 1 || c > cols) {
            throw InputError("bipartite edge (" + std::to_string(r) + ", " + std::to_string(c) +
                             ") outside the banks");
        }
        char& cell = cells_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols) +
                            static_cast<std::size_t>(c - 1)];
        if (cell) {
            throw InputError("duplicate bipartite edge (" + std::to_string(r) + ", " + std::to_string(c) + ")");
        }
        cell = 1;
        edges_.push_back({r, c});
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& [r, c] : edges_) {
        row_adj_[r - 1].push_back(c);
        col_adj_[c - 1].push_back(r);
    }
}

bool BipartiteGraph::has_edge(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) return false;
    return cells_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(col - 1)] != 0;
}

BipartiteGraph to_bipartite(const Pattern& p) {
    if (p.has_free()) {
        throw InputError("cannot build a bipartite graph from a pattern with free ('?') entries");
    }
    std::vector<BiEdge> edges;
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.cols(); ++j) {
            if (p.at(i, j) == Entry::Star) edges.push_back({i, j});
        }
    }
    return BipartiteGraph(p.rows(), p.cols(), edges);
}

BipartiteGraph bipartite_of_graph(const DirectedGraph& g) {
    std::vector<BiEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [from, to] : g.edges()) edges.push_back({to, from});
    return BipartiteGraph(g.size(), g.size(), edges);
}

}  // namespace zfc
