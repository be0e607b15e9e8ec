#include <doctest.h>

#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/series.hpp"
#include "support/oracles.hpp"

using namespace riordan;

namespace {

Series poly(std::initializer_list<long> c, std::size_t precision) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    v.resize(precision, Rational(0));
    return Series(std::move(v));
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::Usage;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("recip of 1-x is the geometric series") {
    const Series s = recip(poly({1, -1}, 10));
    for (std::size_t n = 0; n < 10; ++n) CHECK(s[n] == 1);
}

TEST_CASE("recip matches the naive recurrence on the corpus") {
    for (const Series& a : corpus::random_square_constant(20, 12))
        CHECK(oracle::to_poly(recip(a)) == oracle::inv(oracle::to_poly(a)));
}

TEST_CASE("recip rejects a zero constant term") {
    CHECK(code_of([] { recip(poly({0, 1}, 5)); }) == Errc::ZeroConstantTerm);
}

TEST_CASE("product agrees with the naive Cauchy product") {
    const auto a = corpus::random_square_constant(10, 14, 1);
    const auto b = corpus::random_order_one(10, 14, 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(oracle::to_poly(a[i] * b[i]) == oracle::mul(oracle::to_poly(a[i]), oracle::to_poly(b[i])));
}

TEST_CASE("binary operations keep the smaller precision") {
    const Series a = poly({1, 2, 3}, 8);
    const Series b = poly({1}, 5);
    CHECK((a + b).precision() == 5);
    CHECK((a * b).precision() == 5);
}

TEST_CASE("compose of x(1-x) with x c(x) is x") {
    const std::size_t n = 16;
    CHECK(compose(poly({0, 1, -1}, n), eval("x*catalan(x)", n)) == Series::x(n));
}

TEST_CASE("compose agrees with Horner evaluation") {
    const auto outer = corpus::random_square_constant(10, 12, 3);
    const auto inner = corpus::random_order_one(10, 12, 4);
    for (std::size_t i = 0; i < outer.size(); ++i)
        CHECK(oracle::to_poly(compose(outer[i], inner[i])) ==
              oracle::horner_compose(oracle::to_poly(outer[i]), oracle::to_poly(inner[i])));
}

TEST_CASE("compose needs inner(0) = 0") {
    CHECK(code_of([] { compose(poly({1, 1}, 4), poly({1, 1}, 4)); }) == Errc::NonzeroInnerConstant);
}

TEST_CASE("revert of x(1-x) gives the Catalan numbers") {
    const Series r = revert(poly({0, 1, -1}, 12));
    const auto c = oracle::catalan_numbers(11);
    CHECK(r[0] == 0);
    for (std::size_t n = 1; n < 12; ++n) CHECK(r[n] == c[n - 1]);
}

TEST_CASE("revert agrees with Lagrange inversion") {
    for (const Series& f : corpus::random_order_one(20, 16))
        CHECK(oracle::to_poly(revert(f)) == oracle::lagrange_revert(oracle::to_poly(f)));
}

TEST_CASE("revert is a two-sided compositional inverse") {
    for (const Series& f : corpus::random_order_one(8, 12, 17)) {
        const Series r = revert(f);
        CHECK(compose(f, r) == Series::x(12));
        CHECK(compose(r, f) == Series::x(12));
    }
}

TEST_CASE("revert needs order exactly one") {
    CHECK(code_of([] { revert(poly({0, 0, 1}, 6)); }) == Errc::BadOrder);
    CHECK(code_of([] { revert(poly({1, 1}, 6)); }) == Errc::BadOrder);
}

TEST_CASE("derivative of x c(x) is the central binomial series") {
    const Series d = derive(eval("x*catalan(x)", 9));
    CHECK(d.precision() == 8);
    const long want[] = {1, 2, 6, 20, 70, 252, 924, 3432};
    for (std::size_t n = 0; n < 8; ++n) CHECK(d[n] == want[n]);
}

TEST_CASE("sqrt squared returns the argument") {
    for (const Series& a : corpus::random_square_constant(20, 14)) {
        const Series r = sqrt(a);
        CHECK(r * r == a);
        CHECK(r[0].sign() > 0);
    }
}

TEST_CASE("sqrt rejects a non-square constant term") {
    CHECK(code_of([] { sqrt(poly({2, 1}, 5)); }) == Errc::NonSquareConstant);
    CHECK(code_of([] { sqrt(poly({-1, 1}, 5)); }) == Errc::NonSquareConstant);
}

TEST_CASE("coefficients within precision") {
    CHECK(eval("1/(1-x)", 8).coeff(5) == 1);
    CHECK(eval("1/sqrt(1-6*x+x^2)", 8).coeff(4) == 321);
    CHECK(code_of([] { eval("1/(1-x)", 4).coeff(4); }) == Errc::OutOfPrecision);
}

TEST_CASE("division by a series of positive order") {
    const Series q = divide(poly({0, 0, 1, 1}, 10), poly({0, 1, -1}, 10));
    CHECK(q.precision() == 9);
    CHECK(q[0] == 0);
    CHECK(q[1] == 1);
    CHECK(q[2] == 2);
    CHECK(q[3] == 2);
    CHECK(code_of([] { divide(poly({1}, 5), poly({0, 1}, 5)); }) == Errc::NonUnitDivisor);
}

TEST_CASE("integer powers") {
    const Series a = poly({1, 1}, 6);
    CHECK(pow(a, 3) == poly({1, 3, 3, 1}, 6));
    CHECK(pow(a, -1) == recip(a));
    CHECK(pow(a, 0) == Series::one(6));
}

}  // TEST_SUITE
