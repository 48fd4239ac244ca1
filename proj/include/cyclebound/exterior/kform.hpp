#pragma once

#include "cyclebound/ring.hpp"

#include <map>
#include <vector>

namespace cyclebound {

/// Strictly increasing 0-based base-variable indices.
using IndexTuple = std::vector<int>;

class KForm {
public:
    KForm() = default;
    KForm(VarTablePtr vars, int degree);

    static KForm scalar(const ScaledFraction &c);
    static KForm differential(const VarTablePtr &vars, std::size_t i);
    static KForm one_form(const VarTablePtr &vars, const std::vector<ScaledFraction> &coeffs);
    /// c * dx_{i1} ^ ... ^ dx_{ik}; indices in any order, sign applied.
    static KForm monomial(const ScaledFraction &c, std::vector<int> indices, const VarTablePtr &vars);

    int degree() const { return degree_; }
    const VarTablePtr &vars() const { return vars_; }
    std::size_t n() const { return vars_->n(); }
    const std::map<IndexTuple, ScaledFraction> &coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    ScaledFraction coefficient(const IndexTuple &idx) const;
    /// Adds c to the coefficient of a sorted index tuple.
    void add(const IndexTuple &idx, const ScaledFraction &c);

    KForm operator-() const;
    KForm &operator+=(const KForm &o);
    KForm &operator-=(const KForm &o) { return *this += -o; }
    friend KForm operator+(KForm a, const KForm &b) { return a += b; }
    friend KForm operator-(KForm a, const KForm &b) { return a -= b; }
    friend KForm operator*(const ScaledFraction &c, const KForm &a);
    friend bool operator==(const KForm &a, const KForm &b);

    /// "coef*dx1&dx2 + ..."; differential names follow the base variables.
    std::string to_string() const;

private:
    VarTablePtr vars_;
    int degree_ = 0;
    std::map<IndexTuple, ScaledFraction> coeffs_;
};

KForm wedge(const KForm &a, const KForm &b);
KForm exterior_derivative(const KForm &a);

/// Elimination plan: dx_i replaced by the given 1-form.
using Substitution = std::map<std::size_t, KForm>;

/// Throws UsageError when a substituted differential occurs on a right-hand side.
KForm restrict(const KForm &a, const Substitution &subst);

/// B in a = B dx1^...^dxn.
ScaledFraction volume_coefficient(const KForm &a);

} // namespace cyclebound
