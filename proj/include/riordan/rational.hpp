#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace riordan {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design of the numeric tower
    Rational(const Integer& value) : v_(value) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Accepts "n" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Rational square root when one exists.
    std::optional<Rational> exact_sqrt() const;

    /// "n" for integers, "p/q" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Accumulates a*b into this value without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riordan
