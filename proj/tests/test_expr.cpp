#include <doctest.h>

#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "support/oracles.hpp"

using namespace riordan;

TEST_SUITE("expr") {

TEST_CASE("parse builds the expected tree") {
    const Expr e = parse("1/(1-x)");
    REQUIRE(e.root().kind == ExprKind::Div);
    CHECK(e.root().children[0]->kind == ExprKind::Number);
    CHECK(e.root().children[1]->kind == ExprKind::Sub);
    CHECK(e.root().children[1]->children[1]->kind == ExprKind::Variable);
}

TEST_CASE("print then parse is the identity") {
    for (const char* text : {"1/(1-x)", "x*(1+x)/(1-x)", "(1-x-sqrt(1-6*x+x^2))/2", "-x^2", "rev(x-x^2)",
                             "deriv(x*catalan(x))", "x^-1*(x+x^2)", "3/4*x", "--x"}) {
        const Expr e = parse(text);
        CHECK_MESSAGE(parse(print(e)) == e, text);
    }
}

TEST_CASE("whitespace does not matter") {
    CHECK(parse(" x * ( 1 + x ) / ( 1 - x ) ") == parse("x*(1+x)/(1-x)"));
}

TEST_CASE("syntax errors report the offset") {
    const auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse(text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::SyntaxError);
            REQUIRE(e.span());
            return e.span()->begin;
        }
        FAIL("no error for " << text);
        return 0;
    };
    CHECK(offset_of("1-x-") == 4);
    CHECK(offset_of("(1-x") == 4);
    CHECK(offset_of("1 $ x") == 2);
    CHECK(offset_of("foo(x)") == 0);
    CHECK(offset_of("x^y") == 2);
}

TEST_CASE("the Pascal g evaluates to the geometric series") {
    const Series s = eval("1/(1-x)", 10);
    CHECK(s.precision() == 10);
    for (std::size_t n = 0; n < 10; ++n) CHECK(s[n] == 1);
}

TEST_CASE("closed form of phi matches reversion") {
    const Series phi = eval("(1-x-sqrt(1-6*x+x^2))/2", 5);
    CHECK(phi == Series({0, 1, 2, 6, 22}));
    const Series r = revert(eval("x*(1-x)/(1+x)", 12));
    CHECK(eval("(1-x-sqrt(1-6*x+x^2))/2", 12) == r);
}

TEST_CASE("catalan builtin") {
    CHECK(eval("catalan(x)", 5) == Series({1, 1, 2, 5, 14}));
    CHECK(oracle::to_poly(eval("catalan(x)", 15)) == oracle::catalan_numbers(15));
}

TEST_CASE("precision-losing steps still return the requested precision") {
    CHECK(eval("deriv(deriv(x^3))", 6) == Series({0, 6, 0, 0, 0, 0}));
    CHECK(eval("(x+x^2)/x", 6) == Series({1, 1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(eval("x^-1*(x+x^2)", 4), Error);
    CHECK(eval("catalan(x)", 7).precision() == 7);
}

TEST_CASE("rev and deriv builtins") {
    CHECK(eval("rev(x-x^2)", 8) == eval("x*catalan(x)", 8));
    CHECK(eval("deriv(x*catalan(x))", 6) == eval("1/sqrt(1-4*x)", 6));
}

TEST_CASE("math errors name the subexpression") {
    try {
        eval("1 + 1/x", 5);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnitDivisor);
        REQUIRE(e.span());
        CHECK(std::string(e.what()).find("1/x") != std::string::npos);
    }
    try {
        eval("sqrt(2+x)", 5);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonSquareConstant);
    }
}

}  // TEST_SUITE
