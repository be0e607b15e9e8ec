#include "riordan/triangle_matrix.hpp"

#include <algorithm>
#include <ostream>

#include "riordan/error.hpp"

namespace riordan {

TriangleMatrix::TriangleMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1)
            fail(Errc::InsufficientRows, "triangle row " + std::to_string(n) + " must have " +
                                             std::to_string(n + 1) + " entries");
    }
}

TriangleMatrix TriangleMatrix::identity(std::size_t n) {
    std::vector<std::vector<Rational>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(i + 1);
        rows[i][i] = 1;
    }
    return TriangleMatrix(std::move(rows));
}

Rational TriangleMatrix::at(std::size_t n, std::size_t k) const {
    if (k > n) return Rational(0);
    return rows_.at(n).at(k);
}

TriangleMatrix TriangleMatrix::truncated(std::size_t n) const {
    if (n > rows_.size())
        fail(Errc::InsufficientRows, "matrix has only " + std::to_string(rows_.size()) + " rows");
    return TriangleMatrix({rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(n)});
}

TriangleMatrix TriangleMatrix::inverse() const {
    const std::size_t n = rows_.size();
    std::vector<std::vector<Rational>> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i][i].is_zero()) fail(Errc::ZeroConstantTerm, "singular triangle: zero diagonal entry");
        inv[i].resize(i + 1);
    }
    // column by column: solve L * y = e_k
    for (std::size_t k = 0; k < n; ++k) {
        inv[k][k] = Rational(1) / rows_[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational acc;
            for (std::size_t j = k; j < i; ++j) acc.add_product(rows_[i][j], inv[j][k]);
            inv[i][k] = -acc / rows_[i][i];
        }
    }
    return TriangleMatrix(std::move(inv));
}

std::vector<Rational> TriangleMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() < rows_.size()) fail(Errc::InsufficientTerms, "vector shorter than matrix");
    std::vector<Rational> out(rows_.size());
    for (std::size_t n = 0; n < rows_.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) out[n].add_product(rows_[n][k], v[k]);
    return out;
}

TriangleMatrix operator*(const TriangleMatrix& a, const TriangleMatrix& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<std::vector<Rational>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].resize(i + 1);
        for (std::size_t k = 0; k <= i; ++k)
            for (std::size_t j = k; j <= i; ++j) out[i][k].add_product(a.rows_[i][j], b.rows_[j][k]);
    }
    return TriangleMatrix(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const TriangleMatrix& m) {
    for (const auto& r : m.rows()) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
        os << '\n';
    }
    return os;
}

}  // namespace riordan
