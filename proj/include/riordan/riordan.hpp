#pragma once

#include <cstddef>
#include <string>

#include "riordan/series.hpp"
#include "riordan/triangle_matrix.hpp"

namespace riordan {

/// A Riordan pair (g, f): g(0) != 0, f(0) = 0, f'(0) != 0. Both series are
/// held at a shared precision (the smaller of the two inputs).
class RiordanArray {
public:
    /// Throws Error{InvalidPair} when the pair conditions fail.
    RiordanArray(Series g, Series f);

    /// (1, x) at the given precision.
    static RiordanArray identity(std::size_t precision);

    const Series& g() const noexcept { return g_; }
    const Series& f() const noexcept { return f_; }
    std::size_t precision() const noexcept { return g_.precision(); }

    RiordanArray truncated(std::size_t n) const;

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) = default;

private:
    Series g_;
    Series f_;
};

/// a_{n,k} = [x^n] g f^k for 0 <= k <= n < nrows.
TriangleMatrix expand(const RiordanArray& a, std::size_t nrows);

/// (g, f) * (u, v) = (g * u(f), v(f)).
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);
RiordanArray operator*(const RiordanArray& a, const RiordanArray& b);

/// (1 / g(fbar), fbar) with fbar = Rev(f).
RiordanArray inverse(const RiordanArray& a);

/// Fundamental theorem: (g, f) * h = g * h(f).
Series apply(const RiordanArray& a, const Series& h);

/// Equality of both components over their common known precision.
bool agree(const RiordanArray& a, const RiordanArray& b);

struct SubgroupFlags {
    bool bell = false;          // (g, x g)
    bool hitting_time = false;  // (x f'/f, f)
    bool associated = false;    // (1, f)

    friend bool operator==(const SubgroupFlags&, const SubgroupFlags&) = default;
};

/// Membership tests. The hitting-time identity is compared mod x^{N-1}
/// because it involves f'.
SubgroupFlags subgroup_flags(const RiordanArray& a);

std::string to_string(const SubgroupFlags& flags);

/// (M D)^2 = I with D = diag((-1)^n), decided twice: on the series
/// (fbar(x) = -f(-x) together with g(x) g(-f(x)) = 1) and on the expanded
/// matrix. Throws Error{ConsistencyError} if the routes disagree.
bool is_pseudo_involution(const RiordanArray& a);

/// Series route of is_pseudo_involution on its own.
bool pseudo_involution_series_condition(const RiordanArray& a);

/// Matrix route of is_pseudo_involution on its own, on nrows rows.
bool pseudo_involution_matrix_condition(const RiordanArray& a, std::size_t nrows);

}  // namespace riordan
