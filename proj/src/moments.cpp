#include "riordan/moments.hpp"

#include <algorithm>
#include <utility>

namespace riordan {

namespace {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Rational gaussian_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            const Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

}  // namespace

TerminatedFraction::TerminatedFraction(std::size_t level, JacobiFraction partial)
    : Error(Errc::TerminatedFraction,
            "lambda_" + std::to_string(level) + " = 0; the continued fraction terminates at level " +
                std::to_string(level)),
      level_(level),
      partial_(std::move(partial)) {}

Rational determinant(std::vector<std::vector<Rational>> m) {
    for (const auto& row : m)
        if (row.size() != m.size()) fail(Errc::IncompatibleInputs, "determinant of a non-square matrix");
    const bool integral = std::all_of(m.begin(), m.end(), [](const auto& row) {
        return std::all_of(row.begin(), row.end(), [](const Rational& r) { return r.is_integer(); });
    });
    if (!integral) return gaussian_determinant(std::move(m));
    std::vector<std::vector<Integer>> z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& r : m[i]) z[i].push_back(r.numerator());
    return Rational(bareiss_determinant(std::move(z)));
}

std::vector<Rational> hankel_transform(const std::vector<Rational>& a, std::size_t nmax) {
    if (a.size() < 2 * nmax + 1)
        fail(Errc::InsufficientTerms, "Hankel transform to n = " + std::to_string(nmax) + " needs " +
                                          std::to_string(2 * nmax + 1) + " terms, have " +
                                          std::to_string(a.size()));
    std::vector<Rational> h;
    h.reserve(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) m[i][j] = a[i + j];
        h.push_back(determinant(std::move(m)));
    }
    return h;
}

JacobiFraction jfraction(const Series& g, std::size_t depth) {
    if (g[0] != Rational(1)) fail(Errc::NotNormalized, "J-fraction expansion needs g(0) = 1, got " + g[0].str());
    if (g.precision() < 2 * depth + 1)
        fail(Errc::InsufficientPrecision, "depth " + std::to_string(depth) + " needs precision " +
                                              std::to_string(2 * depth + 1) + ", have " +
                                              std::to_string(g.precision()));
    JacobiFraction jf;
    Series level = g.truncated(2 * depth + 1);
    for (std::size_t k = 0; k < depth; ++k) {
        // 1/level = 1 - b_k x - lambda_{k+1} x^2 * next
        const Series s = Series::one(level.precision()) - recip(level);
        jf.b.push_back(s[1]);
        Series t = s;
        t -= Series::x(s.precision()) * s[1];
        const Rational lam = t[2];
        if (lam.is_zero()) throw TerminatedFraction(k + 1, jf);
        jf.lam.push_back(lam);
        level = t.shifted_down(2) * (Rational(1) / lam);
    }
    return jf;
}

Series jfraction_reconstruct(const JacobiFraction& jf, std::size_t precision) {
    if (jf.b.size() != jf.lam.size() && jf.b.size() != jf.lam.size() + 1)
        fail(Errc::IncompatibleInputs, "a J-fraction carries as many b's as lambdas, or one more");
    Series tail = Series::one(precision);
    for (std::size_t k = jf.b.size(); k-- > 0;) {
        Series denom = Series::one(precision) - Series::x(precision) * jf.b[k];
        if (k < jf.lam.size()) denom -= tail.shifted_up(2).truncated(precision) * jf.lam[k];
        tail = recip(denom);
    }
    return tail;
}

std::vector<Rational> hankel_from_jfraction(const JacobiFraction& jf) {
    std::vector<Rational> h{Rational(1)};
    for (std::size_t n = 1; n <= jf.lam.size(); ++n) {
        Rational p = 1;
        for (std::size_t i = 1; i <= n; ++i) p *= pow(jf.lam[i - 1], static_cast<long>(n + 1 - i));
        h.push_back(p);
    }
    return h;
}

}  // namespace riordan
