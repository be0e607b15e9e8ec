#include <doctest.h>

#include "riordan/antecedent.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/halves.hpp"
#include "support/oracles.hpp"

using namespace riordan;

namespace {

constexpr std::size_t N = 20;
constexpr std::size_t kRows = 10;

Series e(const char* text, std::size_t n = N) { return eval(text, n); }

TriangleMatrix m(const std::vector<std::vector<Rational>>& rows) { return TriangleMatrix(rows); }

Rational q(long p, long d = 1) { return Rational(p, d); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.code();
    }
    FAIL("expected an Error");
    return Errc::Usage;
}

}  // namespace

TEST_SUITE("antecedent") {

TEST_CASE("vertical antecedent of Pascal is (1, x(1+x))") {
    const AntecedentResult r = vertical_antecedent(e("1/(1-x)"), e("x/(1-x)"));
    CHECK(r.kind == HalfKind::Vertical);
    CHECK(agree(r.antecedent.g(), Series::one(N)));
    CHECK(agree(r.antecedent.f(), e("x*(1+x)")));
    CHECK(expand(r.antecedent, 5) ==
          m({{q(1)}, {q(0), q(1)}, {q(0), q(1), q(1)}, {q(0), q(0), q(2), q(1)}, {q(0), q(0), q(1), q(3), q(1)}}));
}

TEST_CASE("vertical antecedent of the example array") {
    const AntecedentResult r = vertical_antecedent(e("1/(1-x)"), e("x*(1+x)/(1-x)"));
    CHECK(agree(r.antecedent.g(), e("(1+x+sqrt(1+6*x+x^2))/(2*sqrt(1+6*x+x^2))")));
    CHECK(agree(r.antecedent.f(), e("x*(1+x+sqrt(1+6*x+x^2))/2")));
    CHECK(agree(r.phi_bar, e("(sqrt(1+6*x+x^2)-x-1)/2")));
    CHECK(expand(r.antecedent, 4) == m({{q(1)}, {q(-1), q(1)}, {q(5), q(1), q(1)}, {q(-25), q(1), q(3), q(1)}}));
}

TEST_CASE("vertical antecedent of the Catalan triangle") {
    const AntecedentResult r = vertical_antecedent(e("catalan(x)"), e("x*catalan(x)"));
    CHECK(agree(r.antecedent.g(), e("(1-2*x)/(1-x)^2")));
    CHECK(agree(r.antecedent.f(), e("x/(1-x)")));
    CHECK(expand(r.antecedent, 5) == m({{q(1)},
                                        {q(0), q(1)},
                                        {q(-1), q(1), q(1)},
                                        {q(-2), q(0), q(2), q(1)},
                                        {q(-3), q(-2), q(2), q(3), q(1)}}));
}

TEST_CASE("horizontal antecedent of Pascal") {
    const AntecedentResult r = horizontal_antecedent(e("1/(1-x)"), e("x/(1-x)"));
    CHECK(r.kind == HalfKind::Horizontal);
    CHECK(agree(r.antecedent.g(), e("(x+sqrt(x^2+4))/sqrt(x^2+4)")));
    CHECK(agree(r.antecedent.f(), e("(x^2+x*sqrt(x^2+4))/2")));
    CHECK(expand(r.antecedent, 5) == m({{q(1)},
                                        {q(1, 2), q(1)},
                                        {q(0), q(1), q(1)},
                                        {q(-1, 16), q(3, 8), q(3, 2), q(1)},
                                        {q(0), q(0), q(1), q(2), q(1)}}));
    CHECK(agree(phi_of(r.antecedent.f()), e("x/sqrt(1-x)")));
}

TEST_CASE("horizontal antecedent of A085478 is (1, x(1+x))") {
    const AntecedentResult r = horizontal_antecedent(e("1/(1-x)"), e("x/(1-x)^2"));
    CHECK(agree(r.antecedent.g(), Series::one(N)));
    CHECK(agree(r.antecedent.f(), e("x*(1+x)")));
    CHECK(agree(r.phi_bar, e("x/(1+x)")));
}

TEST_CASE("horizontal antecedent of the Fibonacci array") {
    const AntecedentResult r = horizontal_antecedent(e("1/(1-x-x^2)"), e("x/(1-x-x^2)"));
    const std::vector<Rational> want = {q(1),        q(1, 2), q(0), q(-5, 16),      q(0),
                                        q(75, 256),  q(0),    q(-625, 2048),    q(0),
                                        q(21875, 65536), q(0)};
    for (std::size_t n = 0; n < want.size(); ++n) CHECK(r.antecedent.g()[n] == want[n]);
    CHECK(agree(r.antecedent.f(), e("(x^2+x*sqrt(4+5*x^2))/2")));
    CHECK(agree(phi_of(r.antecedent.f()), e("x/sqrt(1-x-x^2)")));
}

TEST_CASE("horizontal antecedent of the Catalan triangle is a group inverse") {
    const AntecedentResult r = horizontal_antecedent(e("catalan(x)"), e("x*catalan(x)"));
    const RiordanArray closed = inverse(RiordanArray(e("(2-5*x+3*x^2)/(2-4*x)"), e("x*sqrt(1-x)")));
    CHECK(agree(r.antecedent, closed));
    CHECK(expand(r.antecedent, 4) ==
          m({{q(1)}, {q(1, 2), q(1)}, {q(0), q(1), q(1)}, {q(-21, 16), q(7, 8), q(3, 2), q(1)}}));
}

TEST_CASE("horizontal antecedent errors") {
    CHECK(code_of([] { horizontal_antecedent(e("1"), e("2*x")); }) == Errc::NonSquareLeadingCoefficient);
    CHECK(code_of([] { horizontal_antecedent(e("1"), e("-x")); }) == Errc::NonSquareLeadingCoefficient);
    CHECK(code_of([] { horizontal_antecedent(e("1"), e("x^2")); }) == Errc::DegenerateGamma);
}

TEST_CASE("vertical round trip on the corpus") {
    for (const auto& target : corpus::random_arrays(20, 24)) {
        const AntecedentResult r = vertical_antecedent(target.g(), target.f());
        CHECK(expand(vertical_half(r.antecedent), kRows) == expand(target, kRows));
    }
}

TEST_CASE("horizontal round trip on square-gamma targets") {
    for (const auto& target : corpus::random_square_gamma(20, 24)) {
        const AntecedentResult r = horizontal_antecedent(target.g(), target.f());
        CHECK(expand(horizontal_half(r.antecedent), kRows) == expand(target, kRows));
    }
}

TEST_CASE("antecedent of a half gives back the source") {
    for (const auto& source : corpus::random_arrays(20, 24, 11)) {
        const RiordanArray v = vertical_half(source);
        CHECK(agree(vertical_antecedent(v.g(), v.f()).antecedent, source));
        const RiordanArray h = horizontal_half(source);
        // [x] f(phi) = f'(0)^2, so the positive root recovers the source only when f'(0) > 0
        if (source.f()[1].sign() > 0) CHECK(agree(horizontal_antecedent(h.g(), h.f()).antecedent, source));
    }
}

TEST_CASE("implicit equation residual vanishes") {
    for (const auto& target : corpus::random_square_gamma(12, 20, 13)) {
        const AntecedentResult r = horizontal_antecedent(target.g(), target.f());
        const Series& u = r.phi_bar;
        const Series residual = u * compose(target.f(), u) - Series::x(u.precision(), 2);
        CHECK(residual == Series::zero(residual.precision()));
    }
}

TEST_CASE("ratio of antecedent first components") {
    CHECK(antecedent_ratio_check({e("1/(1-x)"), e("x/(1-x)")}, {e("1"), e("x/(1-x)")}));
    CHECK(antecedent_ratio_check({e("1/(1-x)"), e("x/(1-x)")}, {e("1/(1-x)"), e("x/(1-x)")}));
    CHECK(antecedent_ratio_check({e("catalan(x)", 16), e("x*catalan(x)", 16)}, {e("1", 16), e("x*catalan(x)", 16)}));
    CHECK(code_of([] { antecedent_ratio_check({e("1"), e("x")}, {e("1"), e("x/(1-x)")}); }) ==
          Errc::IncompatibleInputs);
}

TEST_CASE("ratio oracle by direct division") {
    const Series phi = e("x/(1-x)");
    const AntecedentResult a1 = vertical_antecedent(e("1/(1-x)"), phi);
    const AntecedentResult a2 = vertical_antecedent(e("1"), phi);
    const Series ratio = a1.antecedent.g() * recip(a2.antecedent.g());
    const Series pb = a1.phi_bar;
    CHECK(agree(ratio, recip(Series::one(pb.precision()) - pb)));
}

}  // TEST_SUITE
