#pragma once

#include <cstddef>
#include <vector>

#include "riordan/error.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// g(x) = 1 / (1 - b0 x - l1 x^2 / (1 - b1 x - l2 x^2 / (1 - ...))).
/// A fraction of depth d carries d lambdas; b carries d entries, or d + 1
/// when the innermost level is 1 / (1 - b_d x).
struct JacobiFraction {
    std::vector<Rational> b;
    std::vector<Rational> lam;

    std::size_t depth() const noexcept { return lam.size(); }
    friend bool operator==(const JacobiFraction&, const JacobiFraction&) = default;
};

/// Raised by jfraction when some lambda vanishes before the requested depth.
/// Carries the parameters peeled so far.
class TerminatedFraction : public Error {
public:
    TerminatedFraction(std::size_t level, JacobiFraction partial);

    std::size_t level() const noexcept { return level_; }
    const JacobiFraction& partial() const noexcept { return partial_; }

private:
    std::size_t level_;
    JacobiFraction partial_;
};

/// h[n] = det(a_{i+j})_{0 <= i, j <= n} for n = 0..nmax.
/// Needs at least 2 nmax + 1 terms.
std::vector<Rational> hankel_transform(const std::vector<Rational>& a, std::size_t nmax);

/// Exact determinant of a square matrix: fraction-free Bareiss when every
/// entry is an integer, Gaussian elimination otherwise.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Peels b and lambda off g level by level; g(0) must be 1 and the
/// precision at least 2 depth + 1.
JacobiFraction jfraction(const Series& g, std::size_t depth);

/// Evaluates the fraction bottom-up as a series of the given precision.
Series jfraction_reconstruct(const JacobiFraction& jf, std::size_t precision);

/// h_n = prod_{i=1..n} lambda_i^{n+1-i}, for n = 0..depth.
std::vector<Rational> hankel_from_jfraction(const JacobiFraction& jf);

}  // namespace riordan
