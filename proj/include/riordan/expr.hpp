#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/error.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Input language for generating functions:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' '-'? int)?
//   atom   := int | 'x' | '(' expr ')' | fn '(' expr ')'
//   fn     := 'sqrt' | 'rev' | 'deriv' | 'catalan'
//
// A rational literal p/q is the division of two integer literals.

enum class ExprKind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Rev, Deriv, Catalan };

struct ExprNode {
    ExprKind kind = ExprKind::Number;
    Rational value;     // Number
    long exponent = 0;  // Pow
    std::vector<std::shared_ptr<const ExprNode>> children;
    SourceSpan span;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// A parsed expression together with the text it came from.
class Expr {
public:
    Expr(ExprPtr root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

    const ExprNode& root() const { return *root_; }
    const std::string& source() const { return source_; }

    /// Structural equality; source spans are ignored.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    ExprPtr root_;
    std::string source_;
};

/// Throws Error{SyntaxError} carrying the byte offset of the problem.
Expr parse(std::string_view text);

/// Canonical text form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Series of exactly the requested precision. Intermediate precision loss
/// (derivatives, division by x^k) is absorbed by re-evaluating at a higher
/// working precision. Errors name the offending subexpression.
Series eval(const Expr& e, std::size_t precision);

/// parse + eval.
Series eval(std::string_view text, std::size_t precision);

/// c(x) = (1 - sqrt(1 - 4x)) / (2x), the Catalan generating function.
Series catalan_series(std::size_t precision);

}  // namespace riordan
