#include "cyclebound/ring/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace cyclebound {

bool GrlexLess::operator()(const Exponents &a, const Exponents &b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

// ---- VarTable ----

VarTable::VarTable(std::vector<std::string> base_vars, std::vector<std::string> time_vars)
    : base_(std::move(base_vars)), time_(std::move(time_vars)) {
    if (base_.empty())
        throw UsageError("at least one base variable is required");
    std::set<std::string> seen;
    for (const auto &v : base_)
        if (!seen.insert(v).second)
            throw UsageError("duplicate variable name '" + v + "'");
    for (const auto &v : time_)
        if (!seen.insert(v).second)
            throw UsageError("duplicate variable name '" + v + "'");
}

bool VarTable::name_taken(std::string_view name) const {
    return base_index(name) || time_index(name) || radical_index(name);
}

const std::string &VarTable::slot_name(std::size_t slot) const {
    if (slot < base_.size())
        return base_[slot];
    if (slot < slots())
        return radicals_[slot - base_.size()].symbol;
    throw UsageError("slot index out of range");
}

std::optional<std::size_t> VarTable::base_index(std::string_view name) const {
    for (std::size_t i = 0; i < base_.size(); ++i)
        if (base_[i] == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> VarTable::time_index(std::string_view name) const {
    for (std::size_t i = 0; i < time_.size(); ++i)
        if (time_[i] == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> VarTable::radical_index(std::string_view name) const {
    for (std::size_t i = 0; i < radicals_.size(); ++i)
        if (radicals_[i].symbol == name)
            return i;
    return std::nullopt;
}

void VarTable::add_radical(std::string symbol, TermMap square) {
    if (name_taken(symbol))
        throw UsageError("radical symbol '" + symbol + "' clashes with an existing name");
    if (square.empty())
        throw UsageError("radicand of '" + symbol + "' is zero");
    TermMap trimmed;
    for (auto &[e, c] : square) {
        if (e.size() < base_.size())
            throw UsageError("radicand exponent vector too short");
        for (std::size_t i = base_.size(); i < e.size(); ++i)
            if (e[i] != 0)
                throw UsageError("radicand of '" + symbol + "' must not contain radicals");
        trimmed.emplace(Exponents(e.begin(), e.begin() + base_.size()), c);
    }
    radicals_.push_back({std::move(symbol), std::move(trimmed)});
}

// ---- Polynomial ----

Polynomial::Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VarTablePtr vars, TermMap terms) : vars_(std::move(vars)) {
    std::size_t w = vars_ ? vars_->slots() : 0;
    for (auto &[e, c] : terms) {
        if (c == 0)
            continue;
        if (e.size() != w)
            throw UsageError("exponent vector length does not match the variable table");
        for (int k : e)
            if (k < 0)
                throw UsageError("negative exponent in polynomial term");
        terms_.emplace(e, c);
    }
    reduce_radicals();
}

Polynomial Polynomial::constant(VarTablePtr vars, const Rational &c) {
    Polynomial p(std::move(vars));
    if (c != 0)
        p.terms_.emplace(Exponents(p.vars_->slots(), 0), c);
    return p;
}

Polynomial Polynomial::variable(VarTablePtr vars, std::size_t slot) {
    if (slot >= vars->slots())
        throw UsageError("variable slot out of range");
    Polynomial p(std::move(vars));
    Exponents e(p.vars_->slots(), 0);
    e[slot] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::radicand(const VarTablePtr &vars, std::size_t radical) {
    const auto &def = vars->radicals().at(radical);
    Polynomial p(vars);
    for (const auto &[e, c] : def.square) {
        Exponents full(vars->slots(), 0);
        std::copy(e.begin(), e.end(), full.begin());
        p.terms_.emplace(std::move(full), c);
    }
    return p;
}

void Polynomial::check_compatible(const Polynomial &o) const {
    if (vars_ && o.vars_ && vars_ != o.vars_)
        throw UsageError("operands use different variable tables");
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        return std::nullopt;
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty())
        return -1;
    const auto &e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree_in(std::size_t slot) const {
    int d = 0;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e.at(slot));
    return d;
}

bool Polynomial::has_radicals() const {
    if (!vars_)
        return false;
    for (std::size_t k = 0; k < vars_->radical_count(); ++k)
        if (has_radical(k))
            return true;
    return false;
}

bool Polynomial::has_radical(std::size_t radical) const {
    std::size_t slot = vars_->n() + radical;
    for (const auto &[e, c] : terms_)
        if (e[slot] != 0)
            return true;
    return false;
}

const Exponents &Polynomial::leading_exponents() const {
    if (terms_.empty())
        throw UsageError("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational &Polynomial::leading_coefficient() const {
    if (terms_.empty())
        throw UsageError("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    check_compatible(o);
    if (!vars_)
        vars_ = o.vars_;
    for (const auto &[e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) { return *this += -o; }

Polynomial &Polynomial::operator*=(const Polynomial &o) {
    *this = *this * o;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    a.check_compatible(b);
    Polynomial r(a.vars_ ? a.vars_ : b.vars_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    std::size_t w = r.vars_->slots();
    bool overflow = false;
    Exponents e(w);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < w; ++i)
                e[i] = ea[i] + eb[i];
            for (std::size_t i = r.vars_->n(); i < w; ++i)
                overflow = overflow || e[i] > 1;
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    if (overflow)
        r.reduce_radicals();
    return r;
}

bool operator==(const Polynomial &a, const Polynomial &b) {
    if (a.terms_.empty() && b.terms_.empty())
        return true;
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

bool structural_less(const Polynomial &a, const Polynomial &b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto &x, const auto &y) {
            if (x.first != y.first)
                return GrlexLess{}(x.first, y.first);
            return x.second < y.second;
        });
}

void Polynomial::reduce_radicals() {
    if (!vars_ || vars_->radical_count() == 0)
        return;
    std::size_t n = vars_->n();
    bool again = true;
    while (again) {
        again = false;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            const auto &e = it->first;
            std::size_t k = 0;
            while (k < vars_->radical_count() && e[n + k] < 2)
                ++k;
            if (k == vars_->radical_count())
                continue;
            // s^e = sq^(e/2) * s^(e mod 2)
            Exponents rest = e;
            int half = rest[n + k] / 2;
            rest[n + k] %= 2;
            Polynomial mono(vars_);
            mono.terms_.emplace(std::move(rest), it->second);
            terms_.erase(it);
            Polynomial repl = mono * radicand(vars_, k).pow(static_cast<unsigned>(half));
            *this += repl;
            again = true;
            break;
        }
    }
}

Polynomial Polynomial::pow(unsigned k) const {
    if (!vars_)
        throw UsageError("pow on a polynomial without a variable table");
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::conjugate(std::size_t radical) const {
    Polynomial r(*this);
    std::size_t slot = vars_->n() + radical;
    for (auto &[e, c] : r.terms_)
        if (e[slot] % 2 == 1)
            c = -c;
    return r;
}

Polynomial Polynomial::derivative_plain(std::size_t var) const {
    if (!vars_ || var >= vars_->n())
        throw UsageError("derivative with respect to a non-base variable");
    Polynomial r(vars_);
    for (const auto &[e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        Rational coef = c * d[var];
        d[var] -= 1;
        r.terms_.emplace(std::move(d), coef);
    }
    return r;
}

Polynomial Polynomial::radical_part(std::size_t radical) const {
    Polynomial r(vars_);
    std::size_t slot = vars_->n() + radical;
    for (const auto &[e, c] : terms_)
        if (e[slot] != 0)
            r.terms_.emplace(e, c);
    return r;
}

std::optional<Rational> Polynomial::evaluate_exact(std::span<const Rational> point) const {
    if (has_radicals())
        return std::nullopt;
    if (vars_ && point.size() != vars_->n())
        throw UsageError("evaluation point has the wrong dimension");
    Rational sum = 0;
    for (const auto &[e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (e[i])
                t *= rational_pow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (terms_.empty())
        return 0.0;
    std::size_t n = vars_->n();
    if (point.size() != n)
        throw UsageError("evaluation point has the wrong dimension");
    std::vector<double> vals(point.begin(), point.end());
    for (std::size_t k = 0; k < vars_->radical_count(); ++k) {
        double sq = 0;
        for (const auto &[e, c] : vars_->radicals()[k].square) {
            double t = c.get_d();
            for (std::size_t i = 0; i < n; ++i)
                if (e[i])
                    t *= std::pow(point[i], e[i]);
            sq += t;
        }
        if (sq < 0)
            throw DomainError("radicand of '" + vars_->radicals()[k].symbol + "' is negative");
        vals.push_back(std::sqrt(sq));
    }
    double sum = 0;
    for (const auto &[e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (e[i])
                t *= std::pow(vals[i], e[i]);
        sum += t;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_->slot_name(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        std::string term;
        if (mono.empty())
            term = cyclebound::to_string(mag);
        else if (mag == 1)
            term = mono;
        else
            term = cyclebound::to_string(mag) + "*" + mono;
        if (first)
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

// ---- division ----

DivisionResult divide(const Polynomial &a, const Polynomial &b) {
    if (b.is_zero())
        throw UsageError("division by the zero polynomial");
    if (b.has_radicals())
        throw UsageError("divide() needs a radical-free divisor");
    VarTablePtr vars = a.vars() ? a.vars() : b.vars();
    DivisionResult res{Polynomial(vars), Polynomial(vars)};
    const Exponents &lb = b.leading_exponents();
    const Rational &cb = b.leading_coefficient();
    Polynomial r = a;
    while (!r.is_zero()) {
        const Exponents le = r.leading_exponents();
        Rational lc = r.leading_coefficient();
        bool divisible = true;
        for (std::size_t i = 0; i < le.size(); ++i)
            if (le[i] < lb[i]) {
                divisible = false;
                break;
            }
        TermMap single;
        if (divisible) {
            Exponents q(le.size());
            for (std::size_t i = 0; i < le.size(); ++i)
                q[i] = le[i] - lb[i];
            single.emplace(std::move(q), lc / cb);
            Polynomial t(vars, std::move(single));
            res.quotient += t;
            r -= t * b;
        } else {
            single.emplace(le, lc);
            Polynomial t(vars, std::move(single));
            res.remainder += t;
            r -= t;
        }
    }
    return res;
}

std::optional<Polynomial> exact_divide(const Polynomial &a, const Polynomial &b) {
    if (b.is_zero())
        throw UsageError("division by the zero polynomial");
    if (a.is_zero())
        return a;
    Polynomial num = a, den = b;
    const VarTablePtr &vars = b.vars();
    for (std::size_t k = 0; vars && k < vars->radical_count(); ++k) {
        if (!den.has_radical(k))
            continue;
        Polynomial c = den.conjugate(k);
        num *= c;
        den *= c;
    }
    if (den.has_radicals())
        throw Unsupported("could not rationalize divisor");
    const Exponents &lb = den.leading_exponents();
    const Rational &cb = den.leading_coefficient();
    Polynomial q(num.vars() ? num.vars() : vars);
    Polynomial r = num;
    while (!r.is_zero()) {
        const Exponents &le = r.leading_exponents();
        Exponents m(le.size());
        for (std::size_t i = 0; i < le.size(); ++i) {
            m[i] = le[i] - lb[i];
            if (m[i] < 0)
                return std::nullopt;
        }
        TermMap single;
        single.emplace(std::move(m), r.leading_coefficient() / cb);
        Polynomial t(q.vars(), std::move(single));
        q += t;
        r -= t * den;
    }
    return q;
}

Exponents monomial_content(const Polynomial &p) {
    if (p.is_zero())
        return Exponents(p.vars() ? p.vars()->slots() : 0, 0);
    Exponents m = p.terms().begin()->first;
    std::size_t n = p.vars()->n();
    for (std::size_t i = n; i < m.size(); ++i)
        m[i] = 0;
    for (const auto &[e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

Polynomial divide_monomial(const Polynomial &p, const Exponents &m) {
    TermMap out;
    for (const auto &[e, c] : p.terms()) {
        Exponents d = e;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] -= m[i];
            if (d[i] < 0)
                throw UsageError("monomial does not divide every term");
        }
        out.emplace(std::move(d), c);
    }
    return Polynomial(p.vars(), std::move(out));
}

} // namespace cyclebound
