#include <doctest.h>

#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/moments.hpp"
#include "support/oracles.hpp"

using namespace riordan;

namespace {

const char* const kFibonacciG = "(4+6*x^2+2*x*sqrt(4+5*x^2))/(4+5*x^2+x*sqrt(4+5*x^2))";

std::vector<Rational> terms(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

std::vector<Rational> list(std::initializer_list<Rational> v) { return v; }

Rational closed_hankel(long n) {
    const long sign = (n * (n + 1) / 2) % 2 ? -1 : 1;
    return Rational(sign) * pow(Rational(5), 2 * (n * n / 4)) / pow(Rational(4), n * n);
}

std::vector<std::vector<Rational>> hankel_matrix(const std::vector<Rational>& a, std::size_t n) {
    std::vector<std::vector<Rational>> m(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m[i].push_back(a[i + j]);
    return m;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("Hankel transform of the Catalan numbers is all ones") {
    const auto h = hankel_transform(oracle::catalan_numbers(13), 6);
    for (const auto& v : h) CHECK(v == 1);
    const auto c = oracle::catalan_numbers(9);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(oracle::cofactor_det(hankel_matrix(c, n)) == 1);
}

TEST_CASE("Hankel transform of a unit impulse") {
    std::vector<Rational> a(9, Rational(0));
    a[0] = 1;
    const auto h = hankel_transform(a, 4);
    CHECK(h[0] == 1);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(h[n] == 0);
}

TEST_CASE("Hankel transform of the Fibonacci antecedent g") {
    const auto h = hankel_transform(terms(eval(kFibonacciG, 13)), 6);
    for (long n = 0; n <= 6; ++n) CHECK(h[static_cast<std::size_t>(n)] == closed_hankel(n));
    CHECK(h[1] == Rational(-1, 4));
    CHECK(h[2] == Rational(-25, 256));
}

TEST_CASE("Hankel transform needs 2 nmax + 1 terms") {
    CHECK_THROWS_AS(hankel_transform(oracle::catalan_numbers(6), 3), Error);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    for (const auto& seq : corpus::random_integer_sequences(30, 9)) {
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto mtx = hankel_matrix(seq, n);
            CHECK(determinant(mtx) == oracle::cofactor_det(mtx));
        }
    }
    for (const Series& s : corpus::random_square_constant(10, 9)) {
        const auto mtx = hankel_matrix(terms(s), 4);
        CHECK(determinant(mtx) == oracle::cofactor_det(mtx));
    }
}

TEST_CASE("determinant with a zero leading pivot") {
    const std::vector<std::vector<Rational>> mtx = {{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
    CHECK(determinant(mtx) == oracle::cofactor_det(mtx));
}

TEST_CASE("J-fraction of the Fibonacci antecedent g") {
    const Series g = eval(kFibonacciG, 13);
    const JacobiFraction jf = jfraction(g, 6);
    CHECK(jf.b == list({Rational(1, 2), Rational(3, 4), -1, 1, -1, 1}));
    REQUIRE(jf.depth() == 6);
    CHECK(std::vector<Rational>(jf.lam.begin(), jf.lam.begin() + 5) ==
          list({Rational(-1, 4), Rational(-25, 16), Rational(-1, 16), Rational(-25, 16), Rational(-1, 16)}));
    CHECK(jfraction_reconstruct(jf, 13) == g);
}

TEST_CASE("geometric series terminates at level one") {
    try {
        jfraction(eval("1/(1-x)", 9), 4);
        FAIL("expected termination");
    } catch (const TerminatedFraction& t) {
        CHECK(t.code() == Errc::TerminatedFraction);
        CHECK(t.level() == 1);
        CHECK(t.partial().b == list({1}));
        CHECK(t.partial().lam.empty());
    }
}

TEST_CASE("Catalan J-fraction") {
    const JacobiFraction jf = jfraction(eval("catalan(x)", 11), 5);
    CHECK(jf.b == list({1, 2, 2, 2, 2}));
    CHECK(jf.lam == list({1, 1, 1, 1, 1}));
    CHECK(oracle::to_poly(jfraction_reconstruct(jf, 11)) == oracle::catalan_numbers(11));
}

TEST_CASE("J-fraction preconditions") {
    CHECK_THROWS_AS(jfraction(eval("2+x", 9), 3), Error);
    CHECK_THROWS_AS(jfraction(eval("catalan(x)", 6), 3), Error);
}

TEST_CASE("reconstruction of degenerate fractions") {
    const JacobiFraction single{{Rational(3)}, {}};
    CHECK(jfraction_reconstruct(single, 6) == eval("1/(1-3*x)", 6));
    const JacobiFraction even{std::vector<Rational>(4, Rational(0)), std::vector<Rational>(4, Rational(1))};
    const auto want = oracle::catalan_in_x_squared(7);
    CHECK(oracle::to_poly(jfraction_reconstruct(even, 7)) == want);
    CHECK(want == list({1, 0, 1, 0, 2, 0, 5}));
}

TEST_CASE("Hankel values follow from the lambdas") {
    const Series g = eval(kFibonacciG, 13);
    const JacobiFraction jf = jfraction(g, 6);
    const auto from_lam = hankel_from_jfraction(jf);
    const auto direct = hankel_transform(terms(g), 6);
    CHECK(from_lam == direct);
}

TEST_CASE("reconstruction round trip on corpus series") {
    for (const Series& s : corpus::random_square_constant(12, 11, 77)) {
        if (s[0] != 1) continue;
        try {
            const JacobiFraction jf = jfraction(s, 5);
            CHECK(jfraction_reconstruct(jf, 11) == s);
            CHECK(hankel_from_jfraction(jf) == hankel_transform(terms(s), 5));
        } catch (const TerminatedFraction&) {
        }
    }
}

}  // TEST_SUITE
