#pragma once

#include "cyclebound/ring/fraction.hpp"

namespace cyclebound {

struct PowerFactor {
    Polynomial base;
    Rational exponent;
};

/// frac * prod base^exponent over user-declared bases.
///
/// Normal form: bases sorted and distinct, exponents nonzero, no base divides the
/// numerator or denominator of frac, nonnegative integer exponents folded into frac.
class ScaledFraction {
public:
    ScaledFraction() = default;
    ScaledFraction(Polynomial p);       // NOLINT
    ScaledFraction(Fraction f);         // NOLINT
    ScaledFraction(Fraction f, std::vector<PowerFactor> powers);

    static ScaledFraction constant(const VarTablePtr &vars, const Rational &c);
    static ScaledFraction power(const Polynomial &base, const Rational &exponent);

    const Fraction &frac() const { return frac_; }
    const std::vector<PowerFactor> &powers() const { return powers_; }
    const VarTablePtr &vars() const { return frac_.vars(); }

    bool is_zero() const { return frac_.is_zero(); }
    bool is_fraction() const { return powers_.empty(); }
    bool is_polynomial() const { return powers_.empty() && frac_.is_polynomial(); }
    /// The polynomial when is_polynomial(), scaled by the constant denominator.
    std::optional<Polynomial> as_polynomial() const;
    std::optional<Rational> constant_value() const;
    bool has_radicals() const;
    bool has_fractional_powers() const;

    ScaledFraction operator-() const;
    ScaledFraction &operator+=(const ScaledFraction &o) { return *this = *this + o; }
    ScaledFraction &operator-=(const ScaledFraction &o) { return *this = *this - o; }
    ScaledFraction &operator*=(const ScaledFraction &o) { return *this = *this * o; }

    friend ScaledFraction operator+(const ScaledFraction &a, const ScaledFraction &b);
    friend ScaledFraction operator-(const ScaledFraction &a, const ScaledFraction &b);
    friend ScaledFraction operator*(const ScaledFraction &a, const ScaledFraction &b);
    friend ScaledFraction operator/(const ScaledFraction &a, const ScaledFraction &b);
    /// Mathematical equality; false when the difference is not representable.
    friend bool operator==(const ScaledFraction &a, const ScaledFraction &b);

    ScaledFraction inverse() const;
    ScaledFraction derivative(std::size_t var) const;

    /// Exact when there are no radicals and all exponents are integers.
    Value evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    std::string to_string() const;

private:
    void normalize();

    Fraction frac_;
    std::vector<PowerFactor> powers_;
};

/// Structural derivative of a polynomial, widened as needed.
ScaledFraction partial_derivative(const ScaledFraction &s, std::size_t var);

} // namespace cyclebound
