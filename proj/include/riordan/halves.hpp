#pragma once

#include <cstddef>

#include "riordan/riordan.hpp"

namespace riordan {

/// phi = Rev(x^2 / f). Its compositional inverse is x^2 / f.
Series phi_of(const Series& f);

/// x^2 / f for f of order one, at the precision of f.
Series x_squared_over(const Series& f);

/// The array whose (n, k) entry is T_{2n-k, n} of the source:
/// V = (x phi' g(phi) / phi, phi). The alternative first component
/// phi phi' g(phi) / f(phi) is computed too and must agree.
RiordanArray vertical_half(const RiordanArray& r);

/// The array whose (n, k) entry is T_{2n, n+k} of the source:
/// H = (phi phi' g(phi) / f(phi), f(phi)).
RiordanArray horizontal_half(const RiordanArray& r);

/// V[n][k] = T[2n-k][n]; needs 2 (nrows - 1) + 1 source rows.
TriangleMatrix vertical_half_oracle(const TriangleMatrix& t, std::size_t nrows);

/// H[n][k] = T[2n][n+k]; needs 2 (nrows - 1) + 1 source rows.
TriangleMatrix horizontal_half_oracle(const TriangleMatrix& t, std::size_t nrows);

struct HalfDecomposition {
    RiordanArray source;
    Series phi;
    RiordanArray vertical;
    RiordanArray horizontal;
    RiordanArray hitting_factor;  // (x phi'/phi, phi)
    RiordanArray left_factor;     // (g(phi), x)
};

/// Verdicts for the identities relating a decomposition's parts.
struct HalfIdentities {
    bool vertical_factorization = false;    // V = (g(phi), x) (x phi'/phi, phi)
    bool horizontal_factorization = false;  // H = (g(phi), x) (x phi'/phi, f(phi))
    bool horizontal_from_vertical = false;  // H = V (1, f)
    bool vinv_h_is_associated = false;      // V^-1 H = (1, f)
    bool v_times_source = false;            // V (g, f) = (g(phi), x) H
    bool hitting_factor_in_subgroup = false;
    bool f_of_phi_is_phi_squared_over_x = false;

    bool all() const {
        return vertical_factorization && horizontal_factorization && horizontal_from_vertical &&
               vinv_h_is_associated && v_times_source && hitting_factor_in_subgroup &&
               f_of_phi_is_phi_squared_over_x;
    }
};

HalfDecomposition decompose(const RiordanArray& r);

HalfIdentities check_identities(const HalfDecomposition& d);

/// V^-1 = (2 - x f'/f, x^2/f) for the vertical half of (1, f).
RiordanArray vertical_inverse_closed(const Series& f);

/// Whether the vertical half of (1, f) is a pseudo-involution, decided by
/// x^2/f = Rev(x^2 / (-f(-x))) and cross-checked against
/// is_pseudo_involution(vertical_half((1, f))). Throws
/// Error{ConsistencyError} if they disagree.
bool vertical_pseudo_involution_test(const Series& f);

}  // namespace riordan
