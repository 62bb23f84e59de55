#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zfc/pattern.hpp"

namespace zfc {

using Rational = mpq_class;

/// Dense matrix of exact rationals. Indices are 0-based here, unlike vertex
/// ids, since this type is numeric plumbing rather than a graph object.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    // Row-major initializer; every row must have the same length.
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int r, int c) const { return cells_[index(r, c)]; }
    Rational& operator()(int r, int c) { return cells_[index(r, c)]; }

    // Whitespace-separated rationals ("-3", "1/2"), one row per line.
    std::string to_text() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> cells_;
};

RationalMatrix parse_matrix(const std::string& text);

// Throws InputError on a shape mismatch.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Exact rank by Gaussian elimination over the rationals.
int rank(const RationalMatrix& m);

// Star => nonzero, Zero => zero, Free => anything. Throws InputError on a
// shape mismatch.
bool is_realization(const RationalMatrix& m, const Pattern& p);

}  // namespace zfc
