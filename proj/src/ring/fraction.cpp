#include "cyclebound/ring/fraction.hpp"

namespace cyclebound {

double to_double(const Value &v) {
    if (auto q = std::get_if<Rational>(&v))
        return q->get_d();
    return std::get<double>(v);
}

Fraction::Fraction(Polynomial p) : num_(std::move(p)) {
    if (!num_.vars())
        throw UsageError("fraction needs a variable table");
    den_ = Polynomial::constant(num_.vars(), 1);
}

Fraction::Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.vars())
        num_ = Polynomial(den_.vars());
    if (den_.is_zero())
        throw EvaluationSingular("fraction with zero denominator");
    if (num_.vars() != den_.vars())
        throw UsageError("operands use different variable tables");
    normalize();
}

void Fraction::normalize() {
    const auto &vars = den_.vars();
    for (std::size_t k = 0; k < vars->radical_count(); ++k) {
        if (!den_.has_radical(k))
            continue;
        Polynomial c = den_.conjugate(k);
        num_ *= c;
        den_ *= c;
    }
    if (den_.is_zero())
        throw Unsupported("denominator is a zero divisor of the radical ring");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(vars, 1);
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = exact_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::constant(vars, 1);
        } else if (!num_.has_radicals() && !num_.is_constant()) {
            if (auto q2 = exact_divide(den_, num_)) {
                num_ = Polynomial::constant(vars, 1);
                den_ = std::move(*q2);
            }
        }
    }
    Exponents a = monomial_content(num_), b = monomial_content(den_);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = std::min(a[i], b[i]);
    if (std::any_of(a.begin(), a.end(), [](int v) { return v != 0; })) {
        num_ = divide_monomial(num_, a);
        den_ = divide_monomial(den_, a);
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

bool Fraction::is_polynomial() const { return den_.is_constant(); }

std::optional<Rational> Fraction::constant_value() const {
    if (!is_polynomial())
        return std::nullopt;
    auto c = num_.constant_value();
    if (!c)
        return std::nullopt;
    return *c / *den_.constant_value();
}

Fraction Fraction::operator-() const {
    Fraction r(*this);
    r.num_ = -r.num_;
    return r;
}

Fraction operator+(const Fraction &a, const Fraction &b) {
    if (a.den_ == b.den_)
        return Fraction(a.num_ + b.num_, a.den_);
    // nested denominators (d and d^2 after differentiating) are common; avoid d^3
    if (a.den_.is_constant() || b.den_.is_constant())
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    if (auto q = exact_divide(b.den_, a.den_))
        return Fraction(a.num_ * *q + b.num_, b.den_);
    if (auto q = exact_divide(a.den_, b.den_))
        return Fraction(a.num_ + b.num_ * *q, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction &a, const Fraction &b) { return a + (-b); }

Fraction operator*(const Fraction &a, const Fraction &b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction &a, const Fraction &b) { return a * b.inverse(); }

bool operator==(const Fraction &a, const Fraction &b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Fraction Fraction::inverse() const {
    if (num_.is_zero())
        throw EvaluationSingular("inverse of zero");
    return Fraction(den_, num_);
}

Fraction partial_derivative(const Polynomial &p, std::size_t var) {
    const auto &vars = p.vars();
    if (!vars || var >= vars->n())
        throw UsageError("derivative with respect to a non-base variable");
    Fraction out(p.derivative_plain(var));
    for (std::size_t k = 0; k < vars->radical_count(); ++k) {
        Polynomial part = p.radical_part(k);
        if (part.is_zero())
            continue;
        // d(m*s)/dx = m*s*(d sq/dx)/(2 sq)
        Polynomial sq = Polynomial::radicand(vars, k);
        Polynomial dsq = sq.derivative_plain(var);
        if (dsq.is_zero())
            continue;
        // part.derivative_plain already differentiated the m factor of m*s
        out += Fraction(part * dsq * Rational(1, 2), sq);
    }
    return out;
}

Fraction Fraction::derivative(std::size_t var) const {
    Fraction dn = partial_derivative(num_, var);
    if (den_.is_constant())
        return dn * Fraction(Polynomial::constant(vars(), 1 / *den_.constant_value()));
    Fraction dd = partial_derivative(den_, var);
    Fraction d(den_);
    return (dn * d - Fraction(num_) * dd) * Fraction(Polynomial::constant(vars(), 1), den_ * den_);
}

Value Fraction::evaluate(std::span<const Rational> point) const {
    auto dv = den_.evaluate_exact(point);
    auto nv = num_.evaluate_exact(point);
    if (dv && nv) {
        if (*dv == 0)
            throw EvaluationSingular("denominator vanishes at the point");
        return Rational(*nv / *dv);
    }
    std::vector<double> pd;
    for (const auto &q : point)
        pd.push_back(q.get_d());
    return evaluate(std::span<const double>(pd));
}

double Fraction::evaluate(std::span<const double> point) const {
    double d = den_.evaluate(point);
    if (d == 0.0)
        throw EvaluationSingular("denominator vanishes at the point");
    return num_.evaluate(point) / d;
}

std::string Fraction::to_string() const {
    if (den_.is_constant() && *den_.constant_value() == 1)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace cyclebound
