#include "riordan/riordan.hpp"

#include <algorithm>

#include "riordan/error.hpp"

namespace riordan {

namespace {

std::size_t common(const Series& a, const Series& b) { return std::min(a.precision(), b.precision()); }

}  // namespace

RiordanArray::RiordanArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
    const std::size_t n = common(g_, f_);
    if (n < 2) fail(Errc::InvalidPair, "a Riordan pair needs precision >= 2");
    g_ = g_.truncated(n);
    f_ = f_.truncated(n);
    if (g_[0].is_zero()) fail(Errc::InvalidPair, "g(0) must be nonzero");
    if (!f_[0].is_zero()) fail(Errc::InvalidPair, "f(0) must be zero");
    if (f_[1].is_zero()) fail(Errc::InvalidPair, "f'(0) must be nonzero");
}

RiordanArray RiordanArray::identity(std::size_t precision) {
    return RiordanArray(Series::one(precision), Series::x(precision));
}

RiordanArray RiordanArray::truncated(std::size_t n) const { return RiordanArray(g_.truncated(n), f_.truncated(n)); }

TriangleMatrix expand(const RiordanArray& a, std::size_t nrows) {
    if (nrows > a.precision())
        fail(Errc::InsufficientPrecision, "expanding " + std::to_string(nrows) +
                                              " rows needs precision >= " + std::to_string(nrows) +
                                              ", have " + std::to_string(a.precision()));
    std::vector<std::vector<Rational>> rows(nrows);
    for (std::size_t n = 0; n < nrows; ++n) rows[n].resize(n + 1);
    if (nrows == 0) return TriangleMatrix{};
    Series column = a.g().truncated(nrows);
    const Series f = a.f().truncated(nrows);
    for (std::size_t k = 0; k < nrows; ++k) {
        for (std::size_t n = k; n < nrows; ++n) rows[n][k] = column[n];
        if (k + 1 < nrows) column = column * f;
    }
    return TriangleMatrix(std::move(rows));
}

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
    return RiordanArray(a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

RiordanArray operator*(const RiordanArray& a, const RiordanArray& b) { return multiply(a, b); }

RiordanArray inverse(const RiordanArray& a) {
    const Series fbar = revert(a.f());
    return RiordanArray(recip(compose(a.g(), fbar)), fbar);
}

Series apply(const RiordanArray& a, const Series& h) { return a.g() * compose(h, a.f()); }

bool agree(const RiordanArray& a, const RiordanArray& b) {
    return agree(a.g(), b.g()) && agree(a.f(), b.f());
}

SubgroupFlags subgroup_flags(const RiordanArray& a) {
    const std::size_t n = a.precision();
    SubgroupFlags flags;
    flags.bell = equal_mod(a.f(), a.g().shifted_up(1), n);
    // x f'/f = f' / (f/x), known mod x^{N-1}
    const Series hitting_g = derive(a.f()) * recip(a.f().shifted_down(1));
    flags.hitting_time = equal_mod(a.g(), hitting_g, n - 1);
    flags.associated = equal_mod(a.g(), Series::one(n), n);
    return flags;
}

std::string to_string(const SubgroupFlags& flags) {
    std::string out = "{";
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (out.size() > 1) out += ", ";
        out += name;
    };
    add(flags.bell, "bell");
    add(flags.hitting_time, "hitting_time");
    add(flags.associated, "associated");
    return out + "}";
}

bool pseudo_involution_series_condition(const RiordanArray& a) {
    const std::size_t n = a.precision();
    const Series minus_f_minus_x = -a.f().negated_argument();
    if (!equal_mod(revert(a.f()), minus_f_minus_x, n)) return false;
    // g(x) * g(-f(x)) = 1
    const Series product = a.g() * compose(a.g(), -a.f());
    return equal_mod(product, Series::one(n), n);
}

bool pseudo_involution_matrix_condition(const RiordanArray& a, std::size_t nrows) {
    TriangleMatrix m = expand(a, nrows);
    std::vector<std::vector<Rational>> md = m.rows();
    for (auto& row : md)
        for (std::size_t k = 1; k < row.size(); k += 2) row[k] = -row[k];
    const TriangleMatrix md_matrix(std::move(md));
    return md_matrix * md_matrix == TriangleMatrix::identity(nrows);
}

bool is_pseudo_involution(const RiordanArray& a) {
    const bool by_series = pseudo_involution_series_condition(a);
    const bool by_matrix = pseudo_involution_matrix_condition(a, a.precision());
    if (by_series != by_matrix)
        fail(Errc::ConsistencyError, std::string("pseudo-involution routes disagree: series says ") +
                                         (by_series ? "yes" : "no") + ", matrix says " +
                                         (by_matrix ? "yes" : "no"));
    return by_series;
}

}  // namespace riordan
