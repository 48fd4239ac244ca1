#include "cyclebound/systems/systems.hpp"
#include "cyclebound/sign/sampler.hpp"

#include <cmath>

namespace cyclebound {

namespace {

void require_polynomial_field(const VectorField &f, const VarTablePtr &vars, const char *what) {
    if (f.size() != vars->n())
        throw UsageError(std::string(what) + " must have one component per base variable");
    for (const auto &c : f.components) {
        if (c.vars() != vars)
            throw UsageError(std::string(what) + " uses a different variable table");
        if (!c.is_polynomial())
            throw UsageError(std::string(what) + " components must be polynomials");
    }
}

} // namespace

void OdeSystem::validate() const { require_polynomial_field(f, vars, "vector field"); }

void TotalSystem::validate() const {
    if (columns.empty() || columns.size() >= vars->n())
        throw UsageError("total system needs 1 <= m < n columns");
    for (const auto &c : columns)
        require_polynomial_field(c, vars, "column");
}

void PartialSystem::validate() const {
    if (operators.empty() || operators.size() >= vars->n())
        throw UsageError("partial system needs 1 <= m < n operators");
    for (const auto &c : operators)
        require_polynomial_field(c, vars, "operator");
}

void PfaffSystem::validate() const {
    if (forms.empty() || forms.size() >= vars->n())
        throw UsageError("Pfaff system needs 1 <= m < n forms");
    for (const auto &w : forms) {
        if (w.degree() != 1)
            throw UsageError("Pfaff system forms must be 1-forms");
        for (const auto &[k, c] : w.coeffs())
            if (!c.is_polynomial())
                throw UsageError("Pfaff system coefficients must be polynomials");
    }
}

void ExteriorSystem::validate() const {
    if (zetas.empty())
        throw UsageError("exterior system needs at least one form");
    for (const auto &z : zetas) {
        if (z.degree() < 1 || z.degree() > static_cast<int>(vars->n()) - 1)
            throw UsageError("exterior system forms must have degree 1..n-1");
        for (const auto &[k, c] : z.coeffs())
            if (!c.is_polynomial())
                throw UsageError("exterior system coefficients must be polynomials");
    }
}

void LinearTotalSystem::validate() const {
    if (matrices.empty())
        throw UsageError("linear total system needs at least one matrix");
    std::size_t n = matrices.front().size();
    if (n == 0)
        throw UsageError("empty matrix");
    for (const auto &a : matrices) {
        if (a.size() != n)
            throw UsageError("matrices must share one size");
        for (const auto &row : a)
            if (row.size() != n)
                throw UsageError("matrices must be square");
    }
}

OdeSystem induced_ode(const TotalSystem &s, std::size_t j) {
    if (j >= s.m())
        throw UsageError("induced index " + std::to_string(j + 1) + " out of range 1.." + std::to_string(s.m()));
    return {s.vars, s.columns[j]};
}

OdeSystem induced_ode(const PartialSystem &s, std::size_t j) {
    if (j >= s.m())
        throw UsageError("induced index " + std::to_string(j + 1) + " out of range 1.." + std::to_string(s.m()));
    return {s.vars, s.operators[j]};
}

InducedPfaff pfaff_from_ode(const OdeSystem &s) {
    std::size_t n = s.vars->n();
    if (n < 2)
        throw UsageError("pfaff_from_ode needs n >= 2");
    InducedPfaff out;
    out.system.vars = s.vars;
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t h = q + 1; h < n; ++h) {
            KForm psi(s.vars, 1);
            psi.add({static_cast<int>(h)}, s.f[q]);
            psi.add({static_cast<int>(q)}, -s.f[h]);
            out.system.forms.push_back(std::move(psi));
            out.pairs.emplace_back(static_cast<int>(q), static_cast<int>(h));
        }
    return out;
}

std::vector<VectorField> orthogonal_basis_fields(const KForm &w) {
    VectorField a = coefficients_of(w);
    std::size_t n = a.size();
    std::vector<VectorField> out;
    for (std::size_t tau = 0; tau + 1 < n; ++tau) {
        VectorField phi = zero_field(w.vars());
        phi.components[tau] = a[n - 1];
        phi.components[n - 1] = -a[tau];
        out.push_back(std::move(phi));
    }
    return out;
}

FrobeniusTotalReport frobenius_total(const std::vector<DiffOperator> &ops) {
    FrobeniusTotalReport r;
    for (std::size_t j = 0; j < ops.size(); ++j)
        for (std::size_t l = j + 1; l < ops.size(); ++l) {
            DiffOperator b = lie_bracket(ops[j], ops[l]);
            if (!b.is_zero()) {
                r.solvable = false;
                r.failing_pair = {j, l};
                r.bracket = std::move(b);
                return r;
            }
        }
    return r;
}

FrobeniusPfaffReport frobenius_pfaffian(const KForm &w) {
    if (w.degree() != 1)
        throw UsageError("Frobenius condition needs a 1-form");
    FrobeniusPfaffReport r;
    r.residual = wedge(exterior_derivative(w), w);
    r.integrable = r.residual.is_zero();
    return r;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] += a[i][t] * b[t][j];
    return c;
}

LinearCommutingReport linear_commuting(const LinearTotalSystem &s) {
    LinearCommutingReport r;
    for (std::size_t j = 0; j < s.matrices.size(); ++j)
        for (std::size_t l = j + 1; l < s.matrices.size(); ++l)
            if (matmul(s.matrices[j], s.matrices[l]) != matmul(s.matrices[l], s.matrices[j])) {
                r.commuting = false;
                r.failing_pair = {j, l};
                return r;
            }
    return r;
}

namespace {

std::size_t row_rank(std::vector<std::vector<double>> m, double eps) {
    std::size_t rank = 0;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < rows; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c]))
                piv = r;
        if (!(std::fabs(m[piv][c]) > eps))
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            double f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

bool generic_independent(const std::vector<VectorField> &rows, std::uint64_t seed, int samples) {
    if (rows.empty())
        return true;
    std::size_t n = rows.front().size();
    RationalSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        auto pt = sampler.next_point(n);
        std::vector<std::vector<double>> m;
        try {
            for (const auto &row : rows) {
                std::vector<double> vals;
                for (const auto &c : row.components)
                    vals.push_back(to_double(c.evaluate(std::span<const Rational>(pt))));
                m.push_back(std::move(vals));
            }
        } catch (const Error &) {
            continue;
        }
        if (row_rank(m, 1e-9) == rows.size())
            return true;
    }
    return false;
}

// ---- univariate helpers for the eigenvalue test ----

namespace {

void trim(UPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

UPoly umul(const UPoly &a, const UPoly &b) {
    if (a.empty() || b.empty())
        return {};
    UPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

UPoly usub(const UPoly &a, const UPoly &b) {
    UPoly c(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] -= b[i];
    trim(c);
    return c;
}

UPoly udiv_exact(UPoly a, const UPoly &b) {
    if (b.empty())
        throw UsageError("division by the zero polynomial");
    trim(a);
    if (a.empty())
        return {};
    if (a.size() < b.size())
        throw Unsupported("inexact univariate division");
    UPoly q(a.size() - b.size() + 1, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[k + i] -= c * b[i];
    }
    trim(a);
    if (!a.empty())
        throw Unsupported("inexact univariate division");
    trim(q);
    return q;
}

} // namespace

UPoly characteristic_polynomial(const Matrix &a) {
    std::size_t n = a.size();
    std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = {a[i][j]};
            if (i == j)
                m[i][j].push_back(Rational(-1));
            trim(m[i][j]);
        }
    UPoly prev{Rational(1)};
    // pivots are the leading principal minors of A - lambda I, never zero
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = udiv_exact(usub(umul(m[k][k], m[i][j]), umul(m[i][k], m[k][j])), prev);
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    trim(det);
    return det;
}

UPoly reflect(const UPoly &p) {
    UPoly r = p;
    for (std::size_t k = 1; k < r.size(); k += 2)
        r[k] = -r[k];
    return r;
}

Rational resultant(const UPoly &p0, const UPoly &q0) {
    UPoly p = p0, q = q0;
    trim(p);
    trim(q);
    if (p.empty() || q.empty())
        return 0;
    std::size_t dp = p.size() - 1, dq = q.size() - 1;
    std::size_t N = dp + dq;
    if (N == 0)
        return 1;
    Matrix s(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t k = 0; k <= dp; ++k)
            s[r][r + k] = p[dp - k];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t k = 0; k <= dq; ++k)
            s[dq + r][r + k] = q[dq - k];
    Rational det = 1;
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && s[piv][c] == 0)
            ++piv;
        if (piv == N)
            return 0;
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            if (s[r][c] == 0)
                continue;
            Rational f = s[r][c] / s[c][c];
            for (std::size_t k = c; k < N; ++k)
                s[r][k] -= f * s[c][k];
        }
    }
    return det;
}

} // namespace cyclebound
