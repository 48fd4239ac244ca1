#pragma once

#include "cyclebound/ring/polynomial.hpp"

#include <variant>

namespace cyclebound {

/// Exact value when available, otherwise a double.
using Value = std::variant<Rational, double>;

double to_double(const Value &v);

/// num/den with a radical-free denominator. Reduced by monomial content and exact
/// quotients only; equality is by cross-multiplication.
class Fraction {
public:
    Fraction() = default;
    Fraction(Polynomial p); // NOLINT: polynomials embed implicitly
    Fraction(Polynomial num, Polynomial den);

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }
    const VarTablePtr &vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    std::optional<Rational> constant_value() const;

    Fraction operator-() const;
    Fraction &operator+=(const Fraction &o) { return *this = *this + o; }
    Fraction &operator-=(const Fraction &o) { return *this = *this - o; }
    Fraction &operator*=(const Fraction &o) { return *this = *this * o; }

    friend Fraction operator+(const Fraction &a, const Fraction &b);
    friend Fraction operator-(const Fraction &a, const Fraction &b);
    friend Fraction operator*(const Fraction &a, const Fraction &b);
    friend Fraction operator/(const Fraction &a, const Fraction &b);
    friend bool operator==(const Fraction &a, const Fraction &b);

    Fraction inverse() const;
    Fraction derivative(std::size_t var) const;

    /// Throws EvaluationSingular when the denominator vanishes.
    Value evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Full derivative including the radical rule ds/dx = (d square/dx)/(2s).
Fraction partial_derivative(const Polynomial &p, std::size_t var);

} // namespace cyclebound
