#include "riordan/series.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "riordan/error.hpp"

namespace riordan {

namespace {

std::string prec_str(std::size_t n) { return std::to_string(n); }

}  // namespace

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(Errc::InsufficientPrecision, "series precision must be positive");
}

Series::Series(std::initializer_list<Rational> coeffs) : Series(std::vector<Rational>(coeffs)) {}

Series Series::constant(const Rational& c, std::size_t precision) {
    std::vector<Rational> v(precision);
    if (precision > 0) v[0] = c;
    return Series(std::move(v));
}

Series Series::x(std::size_t precision, std::size_t power) {
    std::vector<Rational> v(precision);
    if (power < precision) v[power] = 1;
    return Series(std::move(v));
}

const Rational& Series::coeff(std::size_t n) const {
    if (n >= c_.size())
        fail(Errc::OutOfPrecision,
             "coefficient " + std::to_string(n) + " requested from a series known mod x^" +
                 prec_str(c_.size()));
    return c_[n];
}

std::optional<std::size_t> Series::order() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

Series Series::truncated(std::size_t n) const {
    if (n > c_.size())
        fail(Errc::InsufficientPrecision,
             "need " + prec_str(n) + " coefficients, series is known mod x^" + prec_str(c_.size()));
    return Series(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Series Series::shifted_up(std::size_t k) const {
    std::vector<Rational> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Series(std::move(v));
}

Series Series::shifted_down(std::size_t k) const {
    if (k >= c_.size())
        fail(Errc::InsufficientPrecision,
             "cannot divide a series known mod x^" + prec_str(c_.size()) + " by x^" + prec_str(k));
    for (std::size_t i = 0; i < k; ++i)
        if (!c_[i].is_zero()) fail(Errc::NonUnitDivisor, "series is not divisible by x^" + prec_str(k));
    return Series(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Series Series::negated_argument() const {
    Series r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series& Series::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b[j].is_zero()) r[i + j].add_product(a[i], b[j]);
        }
    }
    return Series(std::move(r));
}

Series recip(const Series& a) {
    if (a[0].is_zero()) fail(Errc::ZeroConstantTerm, "reciprocal of a series with zero constant term");
    const std::size_t n = a.precision();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> r(n);
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (!a[i].is_zero()) acc.add_product(a[i], r[k - i]);
        r[k] = -acc * inv0;
    }
    return Series(std::move(r));
}

Series divide(const Series& a, const Series& b) {
    const auto ob = b.order();
    if (!ob) fail(Errc::NonUnitDivisor, "division by a series that vanishes to its known precision");
    const std::size_t k = *ob;
    if (k == 0) return a * recip(b);
    if (a.precision() <= k)
        fail(Errc::InsufficientPrecision, "numerator precision too low to divide by x^" + prec_str(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (!a[i].is_zero())
            fail(Errc::NonUnitDivisor, "numerator order " + prec_str(i) +
                                           " is below denominator order " + prec_str(k));
    }
    return a.shifted_down(k) * recip(b.shifted_down(k));
}

Series compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero())
        fail(Errc::NonzeroInnerConstant, "composition requires an inner series with zero constant term");
    const std::size_t n = std::min(outer.precision(), inner.precision());
    // sum of outer_k * inner^k; inner^k has order >= k so only k < n contribute
    std::vector<Rational> r(n);
    r[0] = outer[0];
    Series power = Series::one(n);
    const Series in = inner.truncated(n);
    for (std::size_t k = 1; k < n; ++k) {
        power = power * in;
        if (outer[k].is_zero()) continue;
        for (std::size_t i = k; i < n; ++i)
            if (!power[i].is_zero()) r[i].add_product(outer[k], power[i]);
    }
    return Series(std::move(r));
}

Series revert(const Series& f) {
    const std::size_t n = f.precision();
    if (n < 2) fail(Errc::BadOrder, "reversion needs at least the coefficients of x^0 and x^1");
    if (!f[0].is_zero()) fail(Errc::BadOrder, "reversion requires f(0) = 0");
    if (f[1].is_zero()) fail(Errc::BadOrder, "reversion requires f'(0) != 0");

    // powers[k][i] = [x^i] g^k for the partial reversion g. Entry i of g^k
    // (k >= 2) only involves g_1 .. g_{i-k+1}, so it is final before g_i is.
    const Rational inv1 = Rational(1) / f[1];
    std::vector<Rational> g(n);
    g[1] = inv1;
    std::vector<std::vector<Rational>> powers(n, std::vector<Rational>(n));
    powers[1][1] = inv1;
    for (std::size_t i = 2; i < n; ++i) {
        Rational acc;
        for (std::size_t k = 2; k <= i; ++k) {
            Rational e;
            // g^k = g^(k-1) * g, index i
            for (std::size_t j = 1; j + (k - 1) <= i; ++j) {
                const Rational& pk1 = powers[k - 1][i - j];
                if (!g[j].is_zero() && !pk1.is_zero()) e.add_product(g[j], pk1);
            }
            powers[k][i] = e;
            if (!f[k].is_zero()) acc.add_product(f[k], e);
        }
        g[i] = -acc * inv1;
        powers[1][i] = g[i];
    }
    return Series(std::move(g));
}

Series derive(const Series& a) {
    const std::size_t n = a.precision();
    if (n < 2) fail(Errc::InsufficientPrecision, "derivative needs precision >= 2");
    std::vector<Rational> r(n - 1);
    for (std::size_t i = 1; i < n; ++i) r[i - 1] = a[i] * Rational(static_cast<long>(i));
    return Series(std::move(r));
}

Series sqrt(const Series& a) {
    const auto root0 = a[0].exact_sqrt();
    if (!root0 || root0->is_zero())
        fail(Errc::NonSquareConstant,
             "constant term " + a[0].str() + " is not the square of a nonzero rational");
    const std::size_t n = a.precision();
    std::vector<Rational> s(n);
    s[0] = *root0;
    const Rational inv2s0 = Rational(1) / (Rational(2) * s[0]);
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = acc * inv2s0;
    }
    return Series(std::move(s));
}

Series pow(const Series& a, long n) {
    if (n < 0) return pow(recip(a), -n);
    Series result = Series::one(a.precision());
    Series base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

bool equal_mod(const Series& a, const Series& b, std::size_t n) {
    if (a.precision() < n || b.precision() < n)
        fail(Errc::InsufficientPrecision, "comparison mod x^" + prec_str(n) + " exceeds known precision");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool agree(const Series& a, const Series& b) {
    return equal_mod(a, b, std::min(a.precision(), b.precision()));
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    os << '[';
    for (std::size_t i = 0; i < s.precision(); ++i) os << (i ? ", " : "") << s[i];
    return os << "] + O(x^" << s.precision() << ')';
}

}  // namespace riordan
