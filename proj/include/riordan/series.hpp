#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Truncated formal power series over the rationals.
///
/// A series of precision N is known modulo x^N and stores exactly N
/// coefficients. Binary operations produce the minimum precision of their
/// inputs. Operations that genuinely lose information report it: the
/// derivative drops one order, and dividing by a series of order k > 0
/// drops k orders. Multiplying by x^k gains k orders, since the low
/// coefficients are then known to be zero.
class Series {
public:
    /// Precision equals coeffs.size(), which must be positive.
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs);

    static Series constant(const Rational& c, std::size_t precision);
    static Series zero(std::size_t precision) { return constant(0, precision); }
    static Series one(std::size_t precision) { return constant(1, precision); }
    /// The series x (x^1), or x^power when given.
    static Series x(std::size_t precision, std::size_t power = 1);

    std::size_t precision() const noexcept { return c_.size(); }
    std::span<const Rational> coeffs() const noexcept { return c_; }

    /// [x^n]; throws OutOfPrecision when n >= precision.
    const Rational& coeff(std::size_t n) const;
    /// Unchecked access.
    const Rational& operator[](std::size_t n) const noexcept { return c_[n]; }

    /// Index of the first nonzero coefficient, if any is known.
    std::optional<std::size_t> order() const noexcept;

    /// Keeps the first n coefficients; InsufficientPrecision if n > precision.
    Series truncated(std::size_t n) const;

    /// Multiplication by x^k.
    Series shifted_up(std::size_t k) const;
    /// Exact division by x^k; the k lowest coefficients must vanish.
    Series shifted_down(std::size_t k) const;

    /// f(-x).
    Series negated_argument() const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& s);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    friend Series operator*(const Series& a, const Series& b);

    /// Identical coefficients and identical precision.
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> c_;
};

/// Multiplicative inverse; ZeroConstantTerm when a(0) = 0.
Series recip(const Series& a);

/// a / b. A denominator of order k > 0 is allowed when the numerator has
/// order >= k; both are shifted down by k first (precision drops by k).
Series divide(const Series& a, const Series& b);

/// outer(inner(x)); inner(0) must be 0.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse of f with f(0) = 0, f'(0) != 0. Each coefficient is
/// solved from the lower ones, so precision is preserved.
Series revert(const Series& f);

/// Termwise derivative; precision drops by one.
Series derive(const Series& a);

/// Square root with positive constant term; a(0) must be a rational square.
Series sqrt(const Series& a);

/// a^n for any integer n; negative n requires an invertible base.
Series pow(const Series& a, long n);

/// Equality on the first n coefficients (both must be known that far).
bool equal_mod(const Series& a, const Series& b, std::size_t n);

/// Equality over the common known precision.
bool agree(const Series& a, const Series& b);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace riordan
