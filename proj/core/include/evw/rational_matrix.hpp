#pragma once

#include "evw/rational.hpp"

#include <cstddef>
#include <vector>

namespace evw {

// Dense matrix of exact rationals. Just enough linear algebra for the
// transition-matrix analysis: multiply, invert, compare.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& other) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    // Gauss-Jordan with exact pivots; throws on a singular matrix.
    RationalMatrix inverse() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

} // namespace evw
