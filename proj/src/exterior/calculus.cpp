#include "cyclebound/exterior/calculus.hpp"

#include <numeric>

namespace cyclebound {

bool VectorField::is_zero() const {
    for (const auto &c : components)
        if (!c.is_zero())
            return false;
    return true;
}

bool operator==(const VectorField &a, const VectorField &b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i]))
            return false;
    return true;
}

VectorField zero_field(const VarTablePtr &vars) {
    return VectorField{std::vector<ScaledFraction>(vars->n(), ScaledFraction::constant(vars, 0))};
}

VectorField scale(const ScaledFraction &c, const VectorField &f) {
    VectorField r = f;
    for (auto &x : r.components)
        x = c * x;
    return r;
}

std::string Sample::label() const {
    bool wide = false;
    for (int i : xi)
        wide = wide || i >= 9;
    std::string s;
    for (int i : xi) {
        if (wide && !s.empty())
            s += ".";
        s += std::to_string(i + 1);
    }
    return s;
}

std::vector<Sample> all_samples(std::size_t n, std::size_t nu) {
    std::vector<Sample> out;
    if (nu > n)
        return out;
    if (nu == 0)
        return {Sample{}};
    std::vector<int> idx(nu);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back({idx});
        int k = static_cast<int>(nu) - 1;
        while (k >= 0 && idx[k] == static_cast<int>(n - nu) + k)
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (std::size_t j = k + 1; j < nu; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

const VarTablePtr &vars_of(const VectorField &f) {
    if (f.components.empty())
        throw UsageError("empty vector field");
    return f.components.front().vars();
}

} // namespace

ScaledFraction apply_operator(const DiffOperator &X, const ScaledFraction &w) {
    ScaledFraction r = ScaledFraction::constant(w.vars(), 0);
    if (X.size() != w.vars()->n())
        throw UsageError("operator length does not match the variable table");
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i].is_zero())
            continue;
        r += X[i] * w.derivative(i);
    }
    return r;
}

ScaledFraction divergence(const VectorField &f) {
    const auto &vars = vars_of(f);
    ScaledFraction r = ScaledFraction::constant(vars, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        r += f[i].derivative(i);
    return r;
}

ScaledFraction partial_divergence(const VectorField &f, const Sample &xi) {
    const auto &vars = vars_of(f);
    ScaledFraction r = ScaledFraction::constant(vars, 0);
    for (int i : xi.xi) {
        if (i < 0 || static_cast<std::size_t>(i) >= f.size())
            throw UsageError("sample index out of range");
        r += f[i].derivative(i);
    }
    return r;
}

DiffOperator lie_bracket(const DiffOperator &X, const DiffOperator &Y) {
    if (X.size() != Y.size())
        throw UsageError("operators of different length");
    DiffOperator r;
    for (std::size_t i = 0; i < X.size(); ++i)
        r.components.push_back(apply_operator(X, Y[i]) - apply_operator(Y, X[i]));
    return r;
}

KForm boundary_form(const VectorField &f) {
    const auto &vars = vars_of(f);
    int n = static_cast<int>(vars->n());
    KForm r(vars, n - 1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if (j != i)
                idx.push_back(j);
        r.add(idx, i % 2 == 0 ? f[i] : -f[i]);
    }
    return r;
}

VectorField coefficients_of(const KForm &w) {
    if (w.degree() != 1)
        throw UsageError("expected a 1-form");
    VectorField f;
    for (std::size_t i = 0; i < w.n(); ++i)
        f.components.push_back(w.coefficient({static_cast<int>(i)}));
    return f;
}

ScaledFraction dot(const VectorField &a, const VectorField &b) {
    if (a.size() != b.size())
        throw UsageError("dot product of fields with different length");
    ScaledFraction r = ScaledFraction::constant(vars_of(a), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r += a[i] * b[i];
    return r;
}

Polynomial potential(const KForm &w) {
    if (w.degree() != 1)
        throw UsageError("potential needs a 1-form");
    const auto &vars = w.vars();
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < w.n(); ++i) {
        auto p = w.coefficient({static_cast<int>(i)}).as_polynomial();
        if (!p || p->has_radicals())
            throw Unsupported("potential needs polynomial coefficients");
        coeffs.push_back(std::move(*p));
    }
    if (!exterior_derivative(w).is_zero())
        throw PreconditionError("form is not closed");
    // F(x) = int_0^1 sum_i x_i w_i(tx) dt, term by term
    TermMap out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (const auto &[e, c] : coeffs[i].terms()) {
            Exponents m = e;
            int deg = std::accumulate(e.begin(), e.end(), 0);
            m[i] += 1;
            Rational add = c / (deg + 1);
            auto [it, inserted] = out.emplace(m, add);
            if (!inserted)
                it->second += add;
        }
    return Polynomial(vars, std::move(out));
}

} // namespace cyclebound
