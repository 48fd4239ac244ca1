#include "cyclebound/exterior/kform.hpp"

#include <algorithm>

namespace cyclebound {

namespace {

// Sorts indices in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int> &idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

void check_same(const KForm &a, const KForm &b) {
    if (a.vars() != b.vars())
        throw UsageError("forms use different variable tables");
}

} // namespace

KForm::KForm(VarTablePtr vars, int degree) : vars_(std::move(vars)), degree_(degree) {
    if (!vars_)
        throw UsageError("form needs a variable table");
    if (degree < 0)
        throw UsageError("negative form degree");
}

KForm KForm::scalar(const ScaledFraction &c) {
    KForm f(c.vars(), 0);
    f.add({}, c);
    return f;
}

KForm KForm::differential(const VarTablePtr &vars, std::size_t i) {
    if (i >= vars->n())
        throw UsageError("differential index out of range");
    KForm f(vars, 1);
    f.add({static_cast<int>(i)}, ScaledFraction::constant(vars, 1));
    return f;
}

KForm KForm::one_form(const VarTablePtr &vars, const std::vector<ScaledFraction> &coeffs) {
    if (coeffs.size() != vars->n())
        throw UsageError("1-form needs one coefficient per base variable");
    KForm f(vars, 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        f.add({static_cast<int>(i)}, coeffs[i]);
    return f;
}

KForm KForm::monomial(const ScaledFraction &c, std::vector<int> indices, const VarTablePtr &vars) {
    KForm f(vars, static_cast<int>(indices.size()));
    for (int i : indices)
        if (i < 0 || static_cast<std::size_t>(i) >= vars->n())
            throw UsageError("differential index out of range");
    int s = sort_with_sign(indices);
    if (s != 0)
        f.add(indices, s > 0 ? c : -c);
    return f;
}

ScaledFraction KForm::coefficient(const IndexTuple &idx) const {
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end())
        return ScaledFraction::constant(vars_, 0);
    return it->second;
}

void KForm::add(const IndexTuple &idx, const ScaledFraction &c) {
    if (static_cast<int>(idx.size()) != degree_)
        throw UsageError("index tuple does not match the form degree");
    if (c.is_zero())
        return;
    if (c.vars() != vars_)
        throw UsageError("coefficient uses a different variable table");
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

KForm KForm::operator-() const {
    KForm r(*this);
    for (auto &[k, c] : r.coeffs_)
        c = -c;
    return r;
}

KForm &KForm::operator+=(const KForm &o) {
    check_same(*this, o);
    if (o.degree_ != degree_)
        throw UsageError("adding forms of different degree");
    for (const auto &[k, c] : o.coeffs_)
        add(k, c);
    return *this;
}

KForm operator*(const ScaledFraction &c, const KForm &a) {
    KForm r(a.vars_, a.degree_);
    for (const auto &[k, v] : a.coeffs_)
        r.add(k, c * v);
    return r;
}

bool operator==(const KForm &a, const KForm &b) {
    if (a.degree_ != b.degree_)
        return false;
    return (a - b).is_zero();
}

std::string KForm::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto &[idx, c] : coeffs_) {
        std::string basis;
        for (int i : idx) {
            if (!basis.empty())
                basis += "&";
            basis += "d" + vars_->base_vars()[i];
        }
        std::string cs = c.to_string();
        bool unit = c.constant_value() && abs(*c.constant_value()) == 1;
        bool neg = false;
        std::string term;
        if (basis.empty()) {
            term = cs;
        } else if (unit) {
            neg = *c.constant_value() < 0;
            term = basis;
        } else {
            term = "(" + cs + ")*" + basis;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

KForm wedge(const KForm &a, const KForm &b) {
    check_same(a, b);
    KForm r(a.vars(), a.degree() + b.degree());
    if (r.degree() > static_cast<int>(a.n()))
        return r;
    for (const auto &[ia, ca] : a.coeffs())
        for (const auto &[ib, cb] : b.coeffs()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            int s = sort_with_sign(idx);
            if (s == 0)
                continue;
            ScaledFraction c = ca * cb;
            r.add(idx, s > 0 ? c : -c);
        }
    return r;
}

KForm exterior_derivative(const KForm &a) {
    KForm r(a.vars(), a.degree() + 1);
    if (r.degree() > static_cast<int>(a.n()))
        return r;
    for (const auto &[idx, c] : a.coeffs())
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (std::find(idx.begin(), idx.end(), static_cast<int>(j)) != idx.end())
                continue;
            ScaledFraction dc = c.derivative(j);
            if (dc.is_zero())
                continue;
            std::vector<int> full{static_cast<int>(j)};
            full.insert(full.end(), idx.begin(), idx.end());
            int s = sort_with_sign(full);
            r.add(full, s > 0 ? dc : -dc);
        }
    return r;
}

KForm restrict(const KForm &a, const Substitution &subst) {
    for (const auto &[v, rhs] : subst) {
        if (rhs.degree() != 1)
            throw UsageError("substitution right-hand sides must be 1-forms");
        if (rhs.vars() != a.vars())
            throw UsageError("forms use different variable tables");
        for (const auto &[idx, c] : rhs.coeffs())
            if (subst.count(static_cast<std::size_t>(idx[0])))
                throw UsageError("cyclic elimination: d" + a.vars()->base_vars()[idx[0]] +
                                 " is substituted and also appears on a right-hand side");
    }
    if (subst.empty())
        return a;
    KForm r(a.vars(), a.degree());
    for (const auto &[idx, c] : a.coeffs()) {
        KForm term = KForm::scalar(c);
        for (int i : idx) {
            auto it = subst.find(static_cast<std::size_t>(i));
            term = wedge(term, it == subst.end() ? KForm::differential(a.vars(), i) : it->second);
        }
        r += term;
    }
    return r;
}

ScaledFraction volume_coefficient(const KForm &a) {
    if (a.degree() != static_cast<int>(a.n()))
        throw UsageError("volume coefficient needs a form of top degree");
    if (a.is_zero())
        return ScaledFraction::constant(a.vars(), 0);
    return a.coeffs().begin()->second;
}

} // namespace cyclebound
