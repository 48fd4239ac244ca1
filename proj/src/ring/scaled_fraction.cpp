#include "cyclebound/ring/scaled_fraction.hpp"

#include <algorithm>
#include <cmath>

namespace cyclebound {

ScaledFraction::ScaledFraction(Polynomial p) : frac_(std::move(p)) {}

ScaledFraction::ScaledFraction(Fraction f) : frac_(std::move(f)) {}

ScaledFraction::ScaledFraction(Fraction f, std::vector<PowerFactor> powers)
    : frac_(std::move(f)), powers_(std::move(powers)) {
    for (const auto &pf : powers_)
        if (pf.base.vars() != frac_.vars())
            throw UsageError("power base uses a different variable table");
    normalize();
}

ScaledFraction ScaledFraction::constant(const VarTablePtr &vars, const Rational &c) {
    return ScaledFraction(Polynomial::constant(vars, c));
}

ScaledFraction ScaledFraction::power(const Polynomial &base, const Rational &exponent) {
    if (base.is_constant())
        throw Unsupported("power factors need a nonconstant base");
    return ScaledFraction(Fraction(Polynomial::constant(base.vars(), 1)), {{base, exponent}});
}

void ScaledFraction::normalize() {
    const auto &vars = frac_.vars();
    std::sort(powers_.begin(), powers_.end(),
              [](const PowerFactor &a, const PowerFactor &b) { return structural_less(a.base, b.base); });
    std::vector<PowerFactor> merged;
    for (auto &pf : powers_) {
        if (pf.base.is_constant())
            throw Unsupported("power factors need a nonconstant base");
        if (!merged.empty() && merged.back().base == pf.base)
            merged.back().exponent += pf.exponent;
        else
            merged.push_back(std::move(pf));
    }
    if (frac_.is_zero()) {
        powers_.clear();
        return;
    }
    Polynomial num = frac_.num(), den = frac_.den();
    bool changed = false;
    for (auto &pf : merged) {
        while (auto q = exact_divide(num, pf.base)) {
            num = std::move(*q);
            pf.exponent += 1;
            changed = true;
        }
        while (!den.is_constant()) {
            auto q = exact_divide(den, pf.base);
            if (!q)
                break;
            den = std::move(*q);
            pf.exponent -= 1;
            changed = true;
        }
    }
    powers_.clear();
    for (auto &pf : merged) {
        if (pf.exponent == 0)
            continue;
        if (is_nonnegative_integer(pf.exponent)) {
            num *= pf.base.pow(static_cast<unsigned>(to_long(pf.exponent)));
            changed = true;
            continue;
        }
        powers_.push_back(std::move(pf));
    }
    if (changed)
        frac_ = Fraction(std::move(num), std::move(den));
    (void)vars;
}

std::optional<Polynomial> ScaledFraction::as_polynomial() const {
    if (!is_polynomial())
        return std::nullopt;
    return frac_.num() * (1 / *frac_.den().constant_value());
}

std::optional<Rational> ScaledFraction::constant_value() const {
    if (!powers_.empty())
        return std::nullopt;
    return frac_.constant_value();
}

bool ScaledFraction::has_radicals() const {
    if (frac_.num().has_radicals())
        return true;
    for (const auto &pf : powers_)
        if (pf.base.has_radicals())
            return true;
    return false;
}

bool ScaledFraction::has_fractional_powers() const {
    for (const auto &pf : powers_)
        if (!is_integer(pf.exponent))
            return true;
    return false;
}

ScaledFraction ScaledFraction::operator-() const {
    ScaledFraction r(*this);
    r.frac_ = -r.frac_;
    return r;
}

namespace {

// Rewrites a and b over common exponents min(ea, eb) per base.
struct Aligned {
    Fraction a, b;
    std::vector<PowerFactor> common;
};

Aligned align(const ScaledFraction &a, const ScaledFraction &b) {
    Aligned out{a.frac(), b.frac(), {}};
    std::vector<PowerFactor> bases;
    auto add_base = [&](const Polynomial &p) {
        for (const auto &x : bases)
            if (x.base == p)
                return;
        bases.push_back({p, 0});
    };
    for (const auto &pf : a.powers())
        add_base(pf.base);
    for (const auto &pf : b.powers())
        add_base(pf.base);
    auto exponent_in = [](const ScaledFraction &s, const Polynomial &base) {
        for (const auto &pf : s.powers())
            if (pf.base == base)
                return pf.exponent;
        return Rational(0);
    };
    for (const auto &x : bases) {
        Rational ea = exponent_in(a, x.base), eb = exponent_in(b, x.base);
        Rational e = std::min(ea, eb);
        Rational da = ea - e, db = eb - e;
        if (!is_integer(da) || !is_integer(db))
            throw Unsupported("sum of powers of " + x.base.to_string() + " with non-integral exponent gap");
        if (da != 0)
            out.a *= Fraction(x.base.pow(static_cast<unsigned>(to_long(da))));
        if (db != 0)
            out.b *= Fraction(x.base.pow(static_cast<unsigned>(to_long(db))));
        if (e != 0)
            out.common.push_back({x.base, e});
    }
    return out;
}

} // namespace

ScaledFraction operator+(const ScaledFraction &a, const ScaledFraction &b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.powers_.empty() && b.powers_.empty())
        return ScaledFraction(a.frac_ + b.frac_);
    Aligned al = align(a, b);
    return ScaledFraction(al.a + al.b, std::move(al.common));
}

ScaledFraction operator-(const ScaledFraction &a, const ScaledFraction &b) { return a + (-b); }

ScaledFraction operator*(const ScaledFraction &a, const ScaledFraction &b) {
    if (a.powers_.empty() && b.powers_.empty())
        return ScaledFraction(a.frac_ * b.frac_);
    std::vector<PowerFactor> p = a.powers_;
    p.insert(p.end(), b.powers_.begin(), b.powers_.end());
    return ScaledFraction(a.frac_ * b.frac_, std::move(p));
}

ScaledFraction operator/(const ScaledFraction &a, const ScaledFraction &b) { return a * b.inverse(); }

bool operator==(const ScaledFraction &a, const ScaledFraction &b) {
    try {
        return (a - b).is_zero();
    } catch (const Unsupported &) {
        return false;
    }
}

ScaledFraction ScaledFraction::inverse() const {
    std::vector<PowerFactor> p = powers_;
    for (auto &pf : p)
        pf.exponent = -pf.exponent;
    return ScaledFraction(frac_.inverse(), std::move(p));
}

ScaledFraction ScaledFraction::derivative(std::size_t var) const {
    Fraction d = frac_.derivative(var);
    // d(F prod b^q) = (dF + F sum q db/b) prod b^q
    for (const auto &pf : powers_) {
        Polynomial db = pf.base.derivative_plain(var);
        if (pf.base.has_radicals())
            throw Unsupported("power factor with a radical base");
        if (db.is_zero())
            continue;
        d += frac_ * Fraction(db * pf.exponent, pf.base);
    }
    return ScaledFraction(std::move(d), powers_);
}

ScaledFraction partial_derivative(const ScaledFraction &s, std::size_t var) { return s.derivative(var); }

Value ScaledFraction::evaluate(std::span<const Rational> point) const {
    if (!has_fractional_powers()) {
        Value f = frac_.evaluate(point);
        if (auto q = std::get_if<Rational>(&f)) {
            Rational v = *q;
            for (const auto &pf : powers_) {
                auto b = pf.base.evaluate_exact(point);
                if (!b)
                    break;
                if (*b == 0 && pf.exponent < 0)
                    throw EvaluationSingular("power base vanishes at the point");
                v *= rational_pow(*b, to_long(pf.exponent));
            }
            bool exact = std::all_of(powers_.begin(), powers_.end(),
                                     [](const PowerFactor &pf) { return !pf.base.has_radicals(); });
            if (exact)
                return v;
        }
    }
    std::vector<double> pd;
    for (const auto &q : point)
        pd.push_back(q.get_d());
    return evaluate(std::span<const double>(pd));
}

double ScaledFraction::evaluate(std::span<const double> point) const {
    double v = frac_.evaluate(point);
    for (const auto &pf : powers_) {
        double b = pf.base.evaluate(point);
        if (b == 0.0 && pf.exponent < 0)
            throw EvaluationSingular("power base vanishes at the point");
        if (b < 0 && !is_integer(pf.exponent))
            throw DomainError("fractional power of a negative base");
        v *= std::pow(b, pf.exponent.get_d());
    }
    return v;
}

std::string ScaledFraction::to_string() const {
    std::string out = frac_.to_string();
    if (powers_.empty())
        return out;
    bool unit = frac_.constant_value() && *frac_.constant_value() == 1;
    bool neg_unit = frac_.constant_value() && *frac_.constant_value() == -1;
    std::string pw;
    for (const auto &pf : powers_) {
        if (!pw.empty())
            pw += "*";
        pw += "(" + pf.base.to_string() + ")^(" + cyclebound::to_string(pf.exponent) + ")";
    }
    if (unit)
        return pw;
    if (neg_unit)
        return "-" + pw;
    if (!frac_.is_polynomial() || frac_.num().terms().size() > 1)
        out = "(" + out + ")";
    return out + "*" + pw;
}

} // namespace cyclebound
