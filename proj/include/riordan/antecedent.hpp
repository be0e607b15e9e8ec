#pragma once

#include <utility>

#include "riordan/riordan.hpp"

namespace riordan {

enum class HalfKind { Vertical, Horizontal };

/// A Riordan array (g, f) whose vertical or horizontal half is a given target.
struct AntecedentResult {
    RiordanArray antecedent;
    Series phi_bar;  // x^2 / f
    HalfKind kind;
};

/// Antecedent (g, f) with vertical half (psi, phi). f = x^2 / Rev(phi), and g is
/// built twice, once by solving phi phi' u / f(phi) = psi and composing with
/// Rev(phi), once from g = (f/x) phibar' psi(phibar). Disagreement throws
/// Error{ConsistencyError}.
AntecedentResult vertical_antecedent(const Series& psi, const Series& phi);

/// Antecedent (g, f) with horizontal half (psi, gamma). Solves
/// u gamma(u) = x^2 for u = phibar = x v with v(0) = 1/sqrt(gamma_1), then
/// f = gamma(u). Throws DegenerateGamma when gamma_1 = 0 and
/// NonSquareLeadingCoefficient when 1/gamma_1 is not a rational square.
AntecedentResult horizontal_antecedent(const Series& psi, const Series& gamma);

/// Given two vertical targets sharing phi, checks g1/g2 = psi1(phibar)/psi2(phibar)
/// for their computed antecedents.
bool antecedent_ratio_check(const std::pair<Series, Series>& target1,
                            const std::pair<Series, Series>& target2);

}  // namespace riordan
