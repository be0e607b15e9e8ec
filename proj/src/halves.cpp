#include "riordan/halves.hpp"

#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_order_one(const Series& f) {
    if (f.precision() < 2 || !f[0].is_zero() || f[1].is_zero())
        fail(Errc::BadOrder, "expected a series with f(0) = 0 and f'(0) != 0");
}

// x phi'/phi = phi' / (phi/x)
Series hitting_g(const Series& phi) { return derive(phi) * recip(phi.shifted_down(1)); }

void require_rows(const TriangleMatrix& t, std::size_t nrows) {
    const std::size_t needed = nrows == 0 ? 0 : 2 * (nrows - 1) + 1;
    if (t.size() < needed)
        fail(Errc::InsufficientRows, "half with " + std::to_string(nrows) + " rows needs " +
                                         std::to_string(needed) + " source rows, have " +
                                         std::to_string(t.size()));
}

}  // namespace

Series x_squared_over(const Series& f) {
    require_order_one(f);
    return recip(f.shifted_down(1)).shifted_up(1);
}

Series phi_of(const Series& f) { return revert(x_squared_over(f)); }

RiordanArray vertical_half(const RiordanArray& r) {
    const Series phi = phi_of(r.f());
    const Series g_phi = compose(r.g(), phi);
    const Series first = hitting_g(phi) * g_phi;
    // phi phi' g(phi) / f(phi)
    const Series alternative = divide(phi * derive(phi) * g_phi, compose(r.f(), phi));
    if (!agree(first, alternative))
        fail(Errc::ConsistencyError, "the two forms of the vertical half's first component disagree");
    return RiordanArray(first, phi);
}

RiordanArray horizontal_half(const RiordanArray& r) {
    const Series phi = phi_of(r.f());
    const Series f_phi = compose(r.f(), phi);
    const Series first = divide(phi * derive(phi) * compose(r.g(), phi), f_phi);
    return RiordanArray(first, f_phi);
}

TriangleMatrix vertical_half_oracle(const TriangleMatrix& t, std::size_t nrows) {
    require_rows(t, nrows);
    std::vector<std::vector<Rational>> rows(nrows);
    for (std::size_t n = 0; n < nrows; ++n)
        for (std::size_t k = 0; k <= n; ++k) rows[n].push_back(t.at(2 * n - k, n));
    return TriangleMatrix(std::move(rows));
}

TriangleMatrix horizontal_half_oracle(const TriangleMatrix& t, std::size_t nrows) {
    require_rows(t, nrows);
    std::vector<std::vector<Rational>> rows(nrows);
    for (std::size_t n = 0; n < nrows; ++n)
        for (std::size_t k = 0; k <= n; ++k) rows[n].push_back(t.at(2 * n, n + k));
    return TriangleMatrix(std::move(rows));
}

HalfDecomposition decompose(const RiordanArray& r) {
    const Series phi = phi_of(r.f());
    RiordanArray hitting(hitting_g(phi), phi);
    RiordanArray left(compose(r.g(), phi), Series::x(phi.precision()));
    return HalfDecomposition{r, phi, vertical_half(r), horizontal_half(r), std::move(hitting), std::move(left)};
}

HalfIdentities check_identities(const HalfDecomposition& d) {
    HalfIdentities out;
    const RiordanArray associated(Series::one(d.source.precision()), d.source.f());
    const Series f_phi = compose(d.source.f(), d.phi);
    const RiordanArray hitting_h(d.hitting_factor.g(), f_phi);

    out.vertical_factorization = agree(d.vertical, d.left_factor * d.hitting_factor);
    out.horizontal_factorization = agree(d.horizontal, d.left_factor * hitting_h);
    out.horizontal_from_vertical = agree(d.horizontal, d.vertical * associated);
    out.vinv_h_is_associated = agree(inverse(d.vertical) * d.horizontal, associated);
    out.v_times_source = agree(d.vertical * d.source, d.left_factor * d.horizontal);
    out.hitting_factor_in_subgroup = subgroup_flags(d.hitting_factor).hitting_time;
    out.f_of_phi_is_phi_squared_over_x = agree(f_phi, (d.phi * d.phi).shifted_down(1));
    return out;
}

RiordanArray vertical_inverse_closed(const Series& f) {
    require_order_one(f);
    const Series x_fprime_over_f = derive(f) * recip(f.shifted_down(1));
    const Series g = Series::constant(2, x_fprime_over_f.precision()) - x_fprime_over_f;
    return RiordanArray(g, x_squared_over(f));
}

bool vertical_pseudo_involution_test(const Series& f) {
    require_order_one(f);
    const Series lhs = x_squared_over(f);
    const Series rhs = revert(x_squared_over(-f.negated_argument()));
    const bool by_identity = agree(lhs, rhs);
    const RiordanArray v = vertical_half(RiordanArray(Series::one(f.precision()), f));
    const bool by_array = is_pseudo_involution(v);
    if (by_identity != by_array)
        fail(Errc::ConsistencyError, std::string("vertical pseudo-involution test disagrees: identity says ") +
                                         (by_identity ? "yes" : "no") + ", array check says " +
                                         (by_array ? "yes" : "no"));
    return by_identity;
}

}  // namespace riordan
