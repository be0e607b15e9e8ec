#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Lower-triangular exact matrix; row n stores entries 0..n.
class TriangleMatrix {
public:
    TriangleMatrix() = default;
    explicit TriangleMatrix(std::vector<std::vector<Rational>> rows);

    static TriangleMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

    /// Entry (n, k); zero above the diagonal.
    Rational at(std::size_t n, std::size_t k) const;

    TriangleMatrix truncated(std::size_t n) const;

    /// Exact inverse by forward substitution; the diagonal must be nonzero.
    TriangleMatrix inverse() const;

    /// Row n, entries 0..n of (this * v) where v is a column vector of length >= size().
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend TriangleMatrix operator*(const TriangleMatrix& a, const TriangleMatrix& b);
    friend bool operator==(const TriangleMatrix& a, const TriangleMatrix& b) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

std::ostream& operator<<(std::ostream& os, const TriangleMatrix& m);

}  // namespace riordan
