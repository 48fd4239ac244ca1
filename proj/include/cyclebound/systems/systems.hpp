#pragma once

#include "cyclebound/exterior.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace cyclebound {

/// dx/dt = f(x)
struct OdeSystem {
    VarTablePtr vars;
    VectorField f;

    void validate() const;
};

/// dx = X(x) dt; columns[j] is the dt_j column.
struct TotalSystem {
    VarTablePtr vars;
    std::vector<VectorField> columns;

    std::size_t m() const { return columns.size(); }
    void validate() const;
};

/// X_j(x) y = 0
struct PartialSystem {
    VarTablePtr vars;
    std::vector<DiffOperator> operators;

    std::size_t m() const { return operators.size(); }
    void validate() const;
};

/// omega_j(x) = 0
struct PfaffSystem {
    VarTablePtr vars;
    std::vector<KForm> forms;

    void validate() const;
};

/// zeta_j(x) = 0 with forms of degree 1..n-1
struct ExteriorSystem {
    VarTablePtr vars;
    std::vector<KForm> zetas;

    void validate() const;
};

using Matrix = std::vector<std::vector<Rational>>;

/// dx = A(x) dt with constant matrices; entry (tau, i) of A_j is a_{tau j i}.
struct LinearTotalSystem {
    std::vector<Matrix> matrices;

    std::size_t n() const { return matrices.empty() ? 0 : matrices.front().size(); }
    void validate() const;
};

/// j is 0-based.
OdeSystem induced_ode(const TotalSystem &s, std::size_t j);
OdeSystem induced_ode(const PartialSystem &s, std::size_t j);

struct InducedPfaff {
    PfaffSystem system;
    std::vector<std::pair<int, int>> pairs; // 0-based (q, h), q < h
};

/// psi_qh = f_q dx_h - f_h dx_q for q < h, lexicographic in (q, h).
InducedPfaff pfaff_from_ode(const OdeSystem &s);

/// Phi_tau with phi_l = delta_{l tau} a_n and phi_n = -a_tau.
std::vector<VectorField> orthogonal_basis_fields(const KForm &w);

struct FrobeniusTotalReport {
    bool solvable = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    DiffOperator bracket;
};

FrobeniusTotalReport frobenius_total(const std::vector<DiffOperator> &ops);

struct FrobeniusPfaffReport {
    bool integrable = true;
    KForm residual; // d omega ^ omega
};

FrobeniusPfaffReport frobenius_pfaffian(const KForm &w);

struct LinearCommutingReport {
    bool commuting = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

LinearCommutingReport linear_commuting(const LinearTotalSystem &s);

Matrix matmul(const Matrix &a, const Matrix &b);

/// Rank of the coefficient rows at `samples` random rational points is full at some point.
/// Advisory only: reports whether the rows look linearly independent at a generic point.
bool generic_independent(const std::vector<VectorField> &rows, std::uint64_t seed, int samples = 20);

/// Univariate polynomial, coefficient k multiplies lambda^k.
using UPoly = std::vector<Rational>;

/// det(A - lambda I) by fraction-free (Bareiss) elimination over Q[lambda].
UPoly characteristic_polynomial(const Matrix &a);
/// Resultant via the Sylvester determinant.
Rational resultant(const UPoly &p, const UPoly &q);
/// p(-lambda)
UPoly reflect(const UPoly &p);

} // namespace cyclebound
