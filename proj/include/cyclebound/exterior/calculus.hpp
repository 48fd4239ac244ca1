#pragma once

#include "cyclebound/exterior/kform.hpp"

namespace cyclebound {

struct VectorField {
    std::vector<ScaledFraction> components;

    std::size_t size() const { return components.size(); }
    const ScaledFraction &operator[](std::size_t i) const { return components[i]; }
    bool is_zero() const;
    friend bool operator==(const VectorField &a, const VectorField &b);
};

/// First-order operator sum X_i d/dx_i.
using DiffOperator = VectorField;

VectorField zero_field(const VarTablePtr &vars);
VectorField scale(const ScaledFraction &c, const VectorField &f);

struct Sample {
    std::vector<int> xi; // strictly increasing 0-based indices

    std::size_t nu() const { return xi.size(); }
    /// "1235" style label (1-based digits; multi-digit indices joined by '.').
    std::string label() const;
};

/// All C(n, nu) samples in lexicographic order.
std::vector<Sample> all_samples(std::size_t n, std::size_t nu);

ScaledFraction apply_operator(const DiffOperator &X, const ScaledFraction &w);
ScaledFraction divergence(const VectorField &f);
ScaledFraction partial_divergence(const VectorField &f, const Sample &xi);
DiffOperator lie_bracket(const DiffOperator &X, const DiffOperator &Y);

/// sum_i (-1)^(i+1) f_i dx1^..(omit i)..^dxn
KForm boundary_form(const VectorField &f);

/// F with dF = w and F(0) = 0 for a closed 1-form with polynomial coefficients.
Polynomial potential(const KForm &w);

/// Components of a 1-form as a field (coefficients of dx_i).
VectorField coefficients_of(const KForm &w);

ScaledFraction dot(const VectorField &a, const VectorField &b);

} // namespace cyclebound
