#include "cyclebound/manifest/expr.hpp"

#include <cctype>

namespace cyclebound {

bool ExprContext::is_positive_base(const Polynomial &p) const {
    for (const auto &b : positive_bases)
        if (b == p)
            return true;
    return false;
}

namespace {

struct Token {
    enum class Type { Number, Ident, Op, LParen, RParen, End };
    Type type;
    std::string text;
    int column;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            bool dot = false;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || (s[j] == '.' && !dot))) {
                dot = dot || s[j] == '.';
                ++j;
            }
            if (s.substr(i, j - i) == ".")
                throw ParseError("stray '.'", 1, col);
            out.push_back({Token::Type::Number, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '&' || c == '^') {
            out.push_back({Token::Type::Op, std::string(1, c), col});
            ++i;
        } else if (c == '(') {
            out.push_back({Token::Type::LParen, "(", col});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::Type::RParen, ")", col});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
        }
    }
    out.push_back({Token::Type::End, "", static_cast<int>(s.size()) + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprAst parse() {
        auto e = expression(0);
        if (peek().type != Token::Type::End)
            fail(peek());
        return e;
    }

private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &next() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token &t) {
        if (t.type == Token::Type::End)
            throw ParseError("unexpected end of expression", 1, t.column);
        throw ParseError("unexpected '" + t.text + "'", 1, t.column);
    }

    static int infix_power(const Token &t) {
        if (t.type != Token::Type::Op)
            return -1;
        switch (t.text[0]) {
        case '+':
        case '-':
            return 10;
        case '*':
        case '/':
        case '&':
            return 20;
        case '^':
            return 40;
        }
        return -1;
    }

    static ExprAst make(ExprNode::Kind k, int col) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->column = col;
        return n;
    }

    ExprAst primary() {
        const Token &t = next();
        switch (t.type) {
        case Token::Type::Number: {
            auto n = make(ExprNode::Kind::Number, t.column);
            n->text = t.text;
            return n;
        }
        case Token::Type::Ident: {
            auto n = make(ExprNode::Kind::Name, t.column);
            n->text = t.text;
            return n;
        }
        case Token::Type::LParen: {
            auto e = expression(0);
            if (peek().type != Token::Type::RParen)
                fail(peek());
            next();
            e->parenthesized = true;
            return e;
        }
        case Token::Type::Op:
            if (t.text == "-") {
                auto n = make(ExprNode::Kind::Neg, t.column);
                n->lhs = expression(30);
                return n;
            }
            if (t.text == "+")
                return expression(30);
            fail(t);
        default:
            fail(t);
        }
    }

    // integer, -integer, or a parenthesized (possibly signed) rational
    Rational exponent() {
        bool paren = false;
        if (peek().type == Token::Type::LParen) {
            paren = true;
            next();
        }
        bool neg = false;
        if (peek().type == Token::Type::Op && peek().text == "-") {
            neg = true;
            next();
        }
        const Token &num = next();
        if (num.type != Token::Type::Number || num.text.find('.') != std::string::npos)
            throw ParseError("exponent must be an integer or a parenthesized rational", 1, num.column);
        Rational q = parse_rational(num.text);
        if (paren && peek().type == Token::Type::Op && peek().text == "/") {
            next();
            const Token &den = next();
            if (den.type != Token::Type::Number || den.text.find('.') != std::string::npos)
                throw ParseError("exponent denominator must be an integer", 1, den.column);
            Rational d = parse_rational(den.text);
            if (d == 0)
                throw ParseError("zero exponent denominator", 1, den.column);
            q /= d;
        }
        if (paren) {
            if (peek().type != Token::Type::RParen)
                fail(peek());
            next();
        }
        return neg ? Rational(-q) : q;
    }

    ExprAst expression(int min_power) {
        ExprAst lhs = primary();
        while (true) {
            const Token &op = peek();
            int p = infix_power(op);
            if (p < 0 || p <= min_power)
                break;
            next();
            if (op.text == "^") {
                auto n = make(ExprNode::Kind::Pow, op.column);
                n->exponent = exponent();
                n->lhs = std::move(lhs);
                lhs = std::move(n);
                continue;
            }
            ExprNode::Kind k = op.text == "+"   ? ExprNode::Kind::Add
                               : op.text == "-" ? ExprNode::Kind::Sub
                               : op.text == "/" ? ExprNode::Kind::Div
                                                : ExprNode::Kind::Mul;
            auto n = make(k, op.column);
            n->lhs = std::move(lhs);
            n->rhs = expression(p);
            lhs = std::move(n);
        }
        return lhs;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

KForm pow_form(const KForm &base, unsigned k, const VarTablePtr &vars) {
    ScaledFraction b = base.coefficient({});
    ScaledFraction r = ScaledFraction::constant(vars, 1);
    for (unsigned i = 0; i < k; ++i)
        r *= b;
    return KForm::scalar(r);
}

KForm add_forms(const KForm &a, const KForm &b, int col) {
    if (a.degree() != b.degree()) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        throw ParseError("adding forms of degree " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()),
                         1, col);
    }
    return a + b;
}

} // namespace

ExprAst parse_ast(std::string_view text) { return Parser(lex(text)).parse(); }

KForm evaluate_ast(const ExprNode &node, const ExprContext &ctx) {
    const auto &vars = ctx.vars;
    switch (node.kind) {
    case ExprNode::Kind::Number:
        return KForm::scalar(ScaledFraction::constant(vars, parse_rational(node.text)));
    case ExprNode::Kind::Name: {
        const std::string &s = node.text;
        if (auto it = ctx.names.find(s); it != ctx.names.end())
            return it->second;
        if (auto i = vars->base_index(s))
            return KForm::scalar(Polynomial::variable(vars, *i));
        if (auto k = vars->radical_index(s))
            return KForm::scalar(Polynomial::variable(vars, vars->n() + *k));
        if (s.size() > 1 && s[0] == 'd')
            if (auto i = vars->base_index(std::string_view(s).substr(1)))
                return KForm::differential(vars, *i);
        throw ParseError("unknown identifier '" + s + "'", 1, node.column);
    }
    case ExprNode::Kind::Neg:
        return -evaluate_ast(*node.lhs, ctx);
    case ExprNode::Kind::Add:
        return add_forms(evaluate_ast(*node.lhs, ctx), evaluate_ast(*node.rhs, ctx), node.column);
    case ExprNode::Kind::Sub:
        return add_forms(evaluate_ast(*node.lhs, ctx), -evaluate_ast(*node.rhs, ctx), node.column);
    case ExprNode::Kind::Mul:
        return wedge(evaluate_ast(*node.lhs, ctx), evaluate_ast(*node.rhs, ctx));
    case ExprNode::Kind::Div: {
        KForm a = evaluate_ast(*node.lhs, ctx), b = evaluate_ast(*node.rhs, ctx);
        if (b.degree() != 0)
            throw ParseError("division by a form of positive degree", 1, node.column);
        if (b.is_zero())
            throw ParseError("division by zero", 1, node.column);
        return b.coefficient({}).inverse() * a;
    }
    case ExprNode::Kind::Pow: {
        KForm base = evaluate_ast(*node.lhs, ctx);
        if (base.degree() != 0)
            throw ParseError("power of a form of positive degree", 1, node.column);
        const Rational &q = node.exponent;
        if (is_nonnegative_integer(q))
            return pow_form(base, static_cast<unsigned>(to_long(q)), vars);
        ScaledFraction b = base.coefficient({});
        if (auto p = b.as_polynomial(); p && !p->is_constant() && ctx.is_positive_base(*p))
            return KForm::scalar(ScaledFraction::power(*p, q));
        // a bare power of a declared base, e.g. (g^(1/2))^3
        if (b.powers().size() == 1 && b.frac().constant_value() && *b.frac().constant_value() == 1) {
            const auto &pf = b.powers().front();
            return KForm::scalar(ScaledFraction::power(pf.base, pf.exponent * q));
        }
        bool atomic = !node.lhs->parenthesized &&
                      (node.lhs->kind == ExprNode::Kind::Name || node.lhs->kind == ExprNode::Kind::Number);
        if (is_integer(q) && atomic) {
            if (b.is_zero())
                throw ParseError("zero raised to a negative power", 1, node.column);
            return pow_form(KForm::scalar(b.inverse()), static_cast<unsigned>(to_long(-q)), vars);
        }
        throw ParseError("exponent " + to_string(q) + " needs an atomic or declared positive base", 1,
                         node.column);
    }
    }
    throw ParseError("bad expression node", 1, node.column);
}

KForm parse_form(std::string_view text, const ExprContext &ctx) {
    auto ast = parse_ast(text);
    return evaluate_ast(*ast, ctx);
}

ScaledFraction parse_scalar(std::string_view text, const ExprContext &ctx) {
    KForm f = parse_form(text, ctx);
    if (f.degree() != 0)
        throw ParseError("expected a scalar, got a " + std::to_string(f.degree()) + "-form", 1, 1);
    return f.coefficient({});
}

Polynomial parse_polynomial(std::string_view text, const ExprContext &ctx) {
    auto p = parse_scalar(text, ctx).as_polynomial();
    if (!p)
        throw ParseError("expected a polynomial", 1, 1);
    return *p;
}

} // namespace cyclebound
