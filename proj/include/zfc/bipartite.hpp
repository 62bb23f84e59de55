#pragma once

#include <set>
#include <utility>
#include <vector>

#include "zfc/pattern.hpp"

namespace zfc {

// (row, column), both 1-indexed.
using BiEdge = std::pair<int, int>;

/// Bipartite graph with a row bank 1..rows and a column bank 1..cols.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    // Throws InputError on out-of-bank endpoints or duplicate edges.
    BipartiteGraph(int rows, int cols, const std::vector<BiEdge>& edges);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<BiEdge>& edges() const { return edges_; }  // sorted
    bool has_edge(int row, int col) const;

    const std::vector<int>& row_neighbors(int row) const { return row_adj_[row - 1]; }
    const std::vector<int>& col_neighbors(int col) const { return col_adj_[col - 1]; }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.edges_ == b.edges_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BiEdge> edges_;
    std::vector<std::vector<int>> row_adj_;
    std::vector<std::vector<int>> col_adj_;
    std::vector<char> cells_;
};

// Row i is joined to column j iff p(i, j) is Star. Patterns carrying Free
// entries are rejected with InputError.
BipartiteGraph to_bipartite(const Pattern& p);

// B_G: row i joined to column j iff G has the edge j -> i.
BipartiteGraph bipartite_of_graph(const DirectedGraph& g);

}  // namespace zfc
