#include "riordan/antecedent.hpp"

#include "riordan/error.hpp"
#include "riordan/halves.hpp"

namespace riordan {

namespace {

// g from both routes. f_of_phi is f(phi) for the antecedent's f.
Series antecedent_g(const Series& psi, const Series& phi, const Series& phi_bar, const Series& f,
                    const Series& f_of_phi) {
    // u = psi * f(phi) / (phi * phi'), then g = u(phibar)
    const Series u = psi * divide(f_of_phi, phi) * recip(derive(phi));
    const Series by_solve = compose(u, phi_bar);
    // g = (f/x) * phibar' * psi(phibar)
    const Series closed = f.shifted_down(1) * derive(phi_bar) * compose(psi, phi_bar);
    if (!agree(by_solve, closed))
        fail(Errc::ConsistencyError, "antecedent g differs between the solved and closed-form routes");
    return by_solve.precision() <= closed.precision() ? by_solve : closed;
}

}  // namespace

AntecedentResult vertical_antecedent(const Series& psi, const Series& phi) {
    const RiordanArray target(psi, phi);
    const Series phi_bar = revert(target.f());
    const Series f = x_squared_over(phi_bar);
    const Series g = antecedent_g(target.g(), target.f(), phi_bar, f, compose(f, target.f()));
    return AntecedentResult{RiordanArray(g, f), phi_bar, HalfKind::Vertical};
}

AntecedentResult horizontal_antecedent(const Series& psi, const Series& gamma) {
    if (gamma.precision() < 2 || !gamma[0].is_zero())
        fail(Errc::InvalidPair, "target second component must satisfy f(0) = 0");
    if (gamma[1].is_zero()) fail(Errc::DegenerateGamma, "[x^1] of the target's second component is 0");
    const Rational& gamma1 = gamma[1];
    const auto v0 = (Rational(1) / gamma1).exact_sqrt();
    if (!v0)
        fail(Errc::NonSquareLeadingCoefficient,
             "1/" + gamma1.str() + " is not a rational square; the antecedent needs a quadratic extension");
    const RiordanArray target(psi, gamma);
    const std::size_t n = target.precision();

    // W(v) = v * gamma(x v) / x must equal 1. [x^m] W is linear in v_m with
    // coefficient 2 gamma_1 v_0, so each v_m follows from v_0 .. v_{m-1}.
    std::vector<Rational> v(n - 1);
    v[0] = *v0;
    const Rational pivot = Rational(2) * gamma1 * v[0];
    for (std::size_t m = 1; m + 1 < n; ++m) {
        const Series vm(std::vector<Rational>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m + 1)));
        const Series u = vm.shifted_up(1);
        const Series w = vm * compose(target.f().truncated(m + 2), u).shifted_down(1);
        v[m] = -w[m] / pivot;
    }
    const Series phi_bar = Series(std::move(v)).shifted_up(1);
    const Series f = compose(target.f(), phi_bar);
    const Series residual = phi_bar * f - Series::x(n, 2);
    if (residual.order())
        fail(Errc::ConsistencyError, "implicit equation residual u*gamma(u) - x^2 does not vanish");

    const Series phi = revert(phi_bar);
    // f(phi) = gamma
    const Series g = antecedent_g(target.g(), phi, phi_bar, f, target.f());
    return AntecedentResult{RiordanArray(g, f), phi_bar, HalfKind::Horizontal};
}

bool antecedent_ratio_check(const std::pair<Series, Series>& target1,
                            const std::pair<Series, Series>& target2) {
    if (!agree(target1.second, target2.second))
        fail(Errc::IncompatibleInputs, "ratio check needs both targets to share the second component");
    const AntecedentResult a1 = vertical_antecedent(target1.first, target1.second);
    const AntecedentResult a2 = vertical_antecedent(target2.first, target2.second);
    const Series lhs = divide(a1.antecedent.g(), a2.antecedent.g());
    const Series rhs = divide(compose(target1.first, a1.phi_bar), compose(target2.first, a1.phi_bar));
    return agree(lhs, rhs);
}

}  // namespace riordan
