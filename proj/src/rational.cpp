#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace riordan {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    v_ += t;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
        if (i == s.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const Integer num = numerator();
    const Integer den = denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace riordan
