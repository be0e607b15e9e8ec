#include "riordan/expr.hpp"

#include <cctype>
#include <string>

namespace riordan {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) syntax_error("expected operator or end of input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void syntax_error(const std::string& expected) const {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw Error(Errc::SyntaxError,
                    "at offset " + std::to_string(pos_) + ": " + expected + ", found " + found,
                    SourceSpan{pos_, pos_});
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) syntax_error(std::string("expected '") + c + "'");
    }

    static ExprPtr make(ExprKind kind, std::vector<ExprPtr> children, std::size_t begin, std::size_t end) {
        auto n = std::make_shared<ExprNode>();
        n->kind = kind;
        n->children = std::move(children);
        n->span = {begin, end};
        return n;
    }

    ExprPtr parse_expr() {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = parse_term();
        for (;;) {
            ExprKind kind;
            if (accept('+')) kind = ExprKind::Add;
            else if (accept('-')) kind = ExprKind::Sub;
            else return lhs;
            ExprPtr rhs = parse_term();
            lhs = make(kind, {lhs, rhs}, begin, pos_);
        }
    }

    ExprPtr parse_term() {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = parse_unary();
        for (;;) {
            ExprKind kind;
            if (accept('*')) kind = ExprKind::Mul;
            else if (accept('/')) kind = ExprKind::Div;
            else return lhs;
            ExprPtr rhs = parse_unary();
            lhs = make(kind, {lhs, rhs}, begin, pos_);
        }
    }

    ExprPtr parse_unary() {
        skip_ws();
        const std::size_t begin = pos_;
        if (accept('-')) {
            ExprPtr operand = parse_unary();
            return make(ExprKind::Neg, {operand}, begin, pos_);
        }
        return parse_factor();
    }

    ExprPtr parse_factor() {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr base = parse_atom();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::string digits = read_digits();
        if (digits.empty()) syntax_error("expected integer exponent");
        if (digits.size() > 9) syntax_error("exponent too large");
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprKind::Pow;
        n->exponent = std::stol(digits) * (negative ? -1 : 1);
        n->children = {base};
        n->span = {begin, pos_};
        return n;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr parse_atom() {
        skip_ws();
        const std::size_t begin = pos_;
        if (pos_ >= text_.size()) syntax_error("expected number, 'x', '(' or function");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprKind::Number;
            n->value = Rational(Integer(read_digits(), 10));
            n->span = {begin, pos_};
            return n;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
            const std::string_view word = text_.substr(pos_, end - pos_);
            ExprKind kind;
            if (word == "x") {
                pos_ = end;
                return make(ExprKind::Variable, {}, begin, pos_);
            } else if (word == "sqrt") {
                kind = ExprKind::Sqrt;
            } else if (word == "rev") {
                kind = ExprKind::Rev;
            } else if (word == "deriv") {
                kind = ExprKind::Deriv;
            } else if (word == "catalan") {
                kind = ExprKind::Catalan;
            } else {
                syntax_error("expected 'x' or one of sqrt, rev, deriv, catalan");
            }
            pos_ = end;
            expect('(');
            ExprPtr arg = parse_expr();
            expect(')');
            return make(kind, {arg}, begin, pos_);
        }
        syntax_error("expected number, 'x', '(' or function");
    }
};

bool same_tree(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_tree(*a.children[i], *b.children[i])) return false;
    return true;
}

void print_node(const ExprNode& n, std::string& out) {
    auto binary = [&](char op) {
        out += '(';
        print_node(*n.children[0], out);
        out += op;
        print_node(*n.children[1], out);
        out += ')';
    };
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        print_node(*n.children[0], out);
        out += ')';
    };
    switch (n.kind) {
        case ExprKind::Number: out += n.value.str(); break;
        case ExprKind::Variable: out += 'x'; break;
        case ExprKind::Add: binary('+'); break;
        case ExprKind::Sub: binary('-'); break;
        case ExprKind::Mul: binary('*'); break;
        case ExprKind::Div: binary('/'); break;
        case ExprKind::Neg:
            out += "(-";
            print_node(*n.children[0], out);
            out += ')';
            break;
        case ExprKind::Pow:
            out += '(';
            print_node(*n.children[0], out);
            out += ")^" + std::to_string(n.exponent);
            break;
        case ExprKind::Sqrt: call("sqrt"); break;
        case ExprKind::Rev: call("rev"); break;
        case ExprKind::Deriv: call("deriv"); break;
        case ExprKind::Catalan: call("catalan"); break;
    }
}

class Evaluator {
public:
    explicit Evaluator(const std::string& source) : source_(source) {}

    Series eval(const ExprNode& n, std::size_t w) const {
        try {
            return eval_unannotated(n, w);
        } catch (const Error& e) {
            if (e.span()) throw;
            const auto text = source_.substr(n.span.begin, n.span.end - n.span.begin);
            throw Error(e.code(),
                        e.detail() + " (in '" + text + "' at offset " + std::to_string(n.span.begin) + ")",
                        n.span);
        }
    }

private:
    const std::string& source_;

    Series eval_unannotated(const ExprNode& n, std::size_t w) const {
        auto arg = [&](std::size_t i) { return eval(*n.children[i], w); };
        switch (n.kind) {
            case ExprKind::Number: return Series::constant(n.value, w);
            case ExprKind::Variable: return Series::x(w);
            case ExprKind::Add: return arg(0) + arg(1);
            case ExprKind::Sub: return arg(0) - arg(1);
            case ExprKind::Mul: return arg(0) * arg(1);
            case ExprKind::Div: return divide(arg(0), arg(1));
            case ExprKind::Neg: return -arg(0);
            case ExprKind::Pow: return pow(arg(0), n.exponent);
            case ExprKind::Sqrt: return sqrt(arg(0));
            case ExprKind::Rev: return revert(arg(0));
            case ExprKind::Deriv: return derive(arg(0));
            case ExprKind::Catalan: {
                const Series inner = arg(0);
                return compose(catalan_series(inner.precision()), inner);
            }
        }
        fail(Errc::SyntaxError, "unknown expression node");
    }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return same_tree(*a.root_, *b.root_); }

Expr parse(std::string_view text) {
    Parser p(text);
    return Expr(p.parse_all(), std::string(text));
}

std::string print(const Expr& e) {
    std::string out;
    print_node(e.root(), out);
    return out;
}

Series eval(const Expr& e, std::size_t precision) {
    if (precision == 0) fail(Errc::InsufficientPrecision, "precision must be positive");
    const Evaluator ev(e.source());
    std::size_t working = precision;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const Series s = ev.eval(e.root(), working);
        if (s.precision() >= precision) return s.truncated(precision);
        working += precision - s.precision();
    }
    fail(Errc::InsufficientPrecision,
         "could not reach precision " + std::to_string(precision) + " for '" + e.source() + "'");
}

Series eval(std::string_view text, std::size_t precision) { return eval(parse(text), precision); }

Series catalan_series(std::size_t precision) {
    std::vector<Rational> c(precision);
    if (precision > 0) c[0] = 1;
    for (std::size_t n = 1; n < precision; ++n) {
        const long nn = static_cast<long>(n);
        c[n] = c[n - 1] * Rational(2 * (2 * nn - 1), nn + 1);
    }
    return Series(std::move(c));
}

}  // namespace riordan
