#include "zfc/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "zfc/error.hpp"

namespace zfc {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw InputError("ragged matrix initializer");
        for (long v : row) cells_.emplace_back(v);
    }
}

std::string RationalMatrix::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c > 0) out.push_back(' ');
            out += (*this)(r, c).get_str();
        }
        out.push_back('\n');
    }
    return out;
}

RationalMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string token;
        std::vector<Rational> row;
        while (tokens >> token) {
            Rational value;
            if (value.set_str(token, 10) != 0) throw InputError("not a rational number: '" + token + "'");
            if (token.find('/') != std::string::npos && value.get_den() == 0) {
                throw InputError("zero denominator in '" + token + "'");
            }
            value.canonicalize();
            row.push_back(std::move(value));
        }
        if (!row.empty()) grid.push_back(std::move(row));
    }
    const int rows = static_cast<int>(grid.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(grid.front().size());
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(grid[r].size()) != cols) {
            throw InputError("matrix row " + std::to_string(r + 1) + " has the wrong number of entries");
        }
        for (int c = 0; c < cols; ++c) m(r, c) = grid[r][c];
    }
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

int rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    const int rows = work.rows();
    const int cols = work.cols();
    int pivot_row = 0;
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        int found = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (sgn(work(r, c)) != 0) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        if (found != pivot_row) {
            for (int k = c; k < cols; ++k) std::swap(work(found, k), work(pivot_row, k));
        }
        for (int r = pivot_row + 1; r < rows; ++r) {
            if (sgn(work(r, c)) == 0) continue;
            const Rational factor = work(r, c) / work(pivot_row, c);
            for (int k = c; k < cols; ++k) work(r, k) -= factor * work(pivot_row, k);
        }
        ++pivot_row;
    }
    return pivot_row;
}

bool is_realization(const RationalMatrix& m, const Pattern& p) {
    if (m.rows() != p.rows() || m.cols() != p.cols()) {
        throw InputError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " but pattern is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
    }
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.cols(); ++j) {
            const bool nonzero = sgn(m(i - 1, j - 1)) != 0;
            switch (p.at(i, j)) {
                case Entry::Star: if (!nonzero) return false; break;
                case Entry::Zero: if (nonzero) return false; break;
                case Entry::Free: break;
            }
        }
    }
    return true;
}

}  // namespace zfc
