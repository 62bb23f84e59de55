#pragma once

#include <string>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

// Star: entry must be nonzero. Zero: entry must be zero. Free: unconstrained.
enum class Entry : char { Zero = '0', Star = '*', Free = '?' };

/// Rectangular zero-nonzero pattern. Rows and columns are 1-indexed.
class Pattern {
public:
    Pattern() = default;
    Pattern(int rows, int cols, Entry fill = Entry::Zero);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Entry at(int row, int col) const { return cells_[index(row, col)]; }
    void set(int row, int col, Entry e) { cells_[index(row, col)] = e; }

    bool has_free() const;

    // One line per row over {*, 0, ?}, each line terminated by '\n'.
    std::string to_text() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::size_t index(int row, int col) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> cells_;
};

// A(G): entry (i, j) is Star iff G has the edge j -> i.
Pattern to_pattern(const DirectedGraph& g);

// A_s: Star off the diagonal iff j -> i (i != j), Free on the diagonal. Loops
// in g are ignored.
Pattern to_simple_pattern(const DirectedGraph& g);

// Reads the stars of a square Free-less pattern back as edges (j -> i for a
// Star at (i, j)). Inverse of to_pattern.
DirectedGraph graph_of_pattern(const Pattern& p);

// A_x: Star on every diagonal cell.
Pattern star_diagonal(const Pattern& p);

// A(S|.): rows in `rows_to_delete` removed, remaining rows in original order.
Pattern delete_rows(const Pattern& p, const VertexSet& rows_to_delete);

// Parses the text format: one row per non-empty line, characters {*, 0, ?}.
// Whitespace inside a line is ignored.
Pattern parse_pattern(const std::string& text);

}  // namespace zfc
