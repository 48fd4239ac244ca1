#pragma once

#include "cyclebound/exterior.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cyclebound {

struct ExprNode {
    enum class Kind { Number, Name, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    int column = 0;           // 1-based
    std::string text;         // number literal or identifier
    Rational exponent;        // Pow only
    bool parenthesized = false;
    std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprAst = std::unique_ptr<ExprNode>;

/// Names visible to expressions besides the variables themselves.
struct ExprContext {
    VarTablePtr vars;
    std::map<std::string, KForm, std::less<>> names;
    /// Bases that may carry negative or fractional exponents as power factors.
    std::vector<Polynomial> positive_bases;

    bool is_positive_base(const Polynomial &p) const;
};

/// Syntax only; errors carry line 1 and the 1-based column.
ExprAst parse_ast(std::string_view text);

/// Evaluates to a form; scalars are 0-forms.
KForm evaluate_ast(const ExprNode &node, const ExprContext &ctx);

KForm parse_form(std::string_view text, const ExprContext &ctx);
ScaledFraction parse_scalar(std::string_view text, const ExprContext &ctx);
/// Rejects values that are not polynomials.
Polynomial parse_polynomial(std::string_view text, const ExprContext &ctx);

} // namespace cyclebound
