#include "evw/rational_matrix.hpp"

#include "evw/error.hpp"

#include <utility>

namespace evw {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw error("matrix dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& lhs = at(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                const Rational& rhs = other.at(k, c);
                if (!rhs.is_zero()) out.at(r, c) += lhs * rhs;
            }
        }
    }
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (cols_ != v.size()) throw error("matrix dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw error("only square matrices can be inverted");
    const std::size_t n = rows_;
    RationalMatrix work(*this);
    RationalMatrix inv = identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw error("singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        Rational scale = work.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work.at(col, c) /= scale;
            inv.at(col, c) /= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            Rational factor = work.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                work.at(r, c) -= factor * work.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

} // namespace evw
