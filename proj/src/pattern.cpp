#include "zfc/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "zfc/error.hpp"

namespace zfc {

Pattern::Pattern(int rows, int cols, Entry fill) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("pattern dimensions must be non-negative");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

std::size_t Pattern::index(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
        throw InputError("pattern index (" + std::to_string(row) + ", " + std::to_string(col) +
                         ") out of range");
    }
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col - 1);
}

bool Pattern::has_free() const {
    return std::find(cells_.begin(), cells_.end(), Entry::Free) != cells_.end();
}

std::string Pattern::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_ + 1));
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) out.push_back(static_cast<char>(at(i, j)));
        out.push_back('\n');
    }
    return out;
}

Pattern to_pattern(const DirectedGraph& g) {
    Pattern p(g.size(), g.size());
    for (const auto& [from, to] : g.edges()) p.set(to, from, Entry::Star);
    return p;
}

Pattern to_simple_pattern(const DirectedGraph& g) {
    Pattern p(g.size(), g.size());
    for (const auto& [from, to] : g.edges()) {
        if (from != to) p.set(to, from, Entry::Star);
    }
    for (int i = 1; i <= g.size(); ++i) p.set(i, i, Entry::Free);
    return p;
}

DirectedGraph graph_of_pattern(const Pattern& p) {
    if (!p.is_square()) throw InputError("only a square pattern describes a graph");
    if (p.has_free()) throw InputError("a pattern with free entries does not describe a loop directed graph");
    std::vector<Edge> edges;
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.cols(); ++j) {
            if (p.at(i, j) == Entry::Star) edges.push_back({j, i});
        }
    }
    return DirectedGraph(p.rows(), edges);
}

Pattern star_diagonal(const Pattern& p) {
    if (!p.is_square()) throw InputError("star_diagonal needs a square pattern");
    Pattern out = p;
    for (int i = 1; i <= p.rows(); ++i) out.set(i, i, Entry::Star);
    return out;
}

Pattern delete_rows(const Pattern& p, const VertexSet& rows_to_delete) {
    for (int r : rows_to_delete) {
        if (r < 1 || r > p.rows()) throw InputError("row " + std::to_string(r) + " out of range");
    }
    Pattern out(p.rows() - static_cast<int>(rows_to_delete.size()), p.cols());
    int target = 0;
    for (int i = 1; i <= p.rows(); ++i) {
        if (rows_to_delete.contains(i)) continue;
        ++target;
        for (int j = 1; j <= p.cols(); ++j) out.set(target, j, p.at(i, j));
    }
    return out;
}

Pattern parse_pattern(const std::string& text) {
    std::vector<std::vector<Entry>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<Entry> row;
        for (char c : line) {
            switch (c) {
                case '*': row.push_back(Entry::Star); break;
                case '0': row.push_back(Entry::Zero); break;
                case '?': row.push_back(Entry::Free); break;
                case ' ': case '\t': case '\r': break;
                default:
                    throw InputError(std::string("unexpected character '") + c + "' in pattern");
            }
        }
        if (!row.empty()) grid.push_back(std::move(row));
    }
    const int rows = static_cast<int>(grid.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(grid.front().size());
    Pattern p(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(grid[i].size()) != cols) {
            throw InputError("pattern row " + std::to_string(i + 1) + " has " +
                             std::to_string(grid[i].size()) + " entries, expected " + std::to_string(cols));
        }
        for (int j = 0; j < cols; ++j) p.set(i + 1, j + 1, grid[i][j]);
    }
    return p;
}

}  // namespace zfc
