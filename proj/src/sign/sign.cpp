#include "cyclebound/sign/sign.hpp"
#include "cyclebound/sign/sampler.hpp"

#include <algorithm>

namespace cyclebound {

std::string to_string(SignKind k) {
    switch (k) {
    case SignKind::PositiveDefinite:
        return "PositiveDefinite";
    case SignKind::NegativeDefinite:
        return "NegativeDefinite";
    case SignKind::PositiveConstSign:
        return "PositiveConstSign";
    case SignKind::NegativeConstSign:
        return "NegativeConstSign";
    case SignKind::IdenticallyZero:
        return "IdenticallyZero";
    case SignKind::Indefinite:
        return "Indefinite";
    case SignKind::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

int SignVerdict::sign() const {
    switch (kind) {
    case SignKind::PositiveDefinite:
    case SignKind::PositiveConstSign:
        return 1;
    case SignKind::NegativeDefinite:
    case SignKind::NegativeConstSign:
        return -1;
    default:
        return 0;
    }
}

namespace {

// Supports of the monomials restricted to base variables; empty support means a constant term.
std::vector<std::vector<int>> supports(const Polynomial &p) {
    std::vector<std::vector<int>> out;
    std::size_t n = p.vars()->n();
    for (const auto &[e, c] : p.terms()) {
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i])
                s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    return out;
}

// Minimal sets of coordinates meeting every support; their vanishing gives the zero set.
std::vector<std::vector<int>> minimal_hitting_sets(const std::vector<std::vector<int>> &sup, std::size_t n) {
    std::vector<unsigned long> masks;
    for (const auto &s : sup) {
        unsigned long m = 0;
        for (int i : s)
            m |= 1ul << i;
        masks.push_back(m);
    }
    std::vector<unsigned long> hits;
    for (unsigned long h = 0; h < (1ul << n); ++h) {
        bool ok = std::all_of(masks.begin(), masks.end(), [&](unsigned long m) { return (m & h) != 0; });
        if (ok)
            hits.push_back(h);
    }
    std::vector<std::vector<int>> out;
    for (unsigned long h : hits) {
        bool minimal = std::none_of(hits.begin(), hits.end(), [&](unsigned long o) { return o != h && (o & h) == o; });
        if (!minimal)
            continue;
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i)
            if (h & (1ul << i))
                s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    return out;
}

bool subspace_excluded(const std::vector<int> &h, const Domain &d) {
    if (h.size() == d.n) {
        std::vector<Rational> origin(d.n, Rational(0));
        for (const auto &p : d.excluded_points)
            if (p == origin)
                return true;
    }
    for (const auto &s : d.excluded_subspaces)
        if (std::includes(h.begin(), h.end(), s.begin(), s.end()))
            return true;
    return false;
}

struct Certificate {
    int sign;
    bool definite;
};

std::optional<Certificate> polynomial_certificate(const Polynomial &p, const Domain &d) {
    if (p.is_zero() || p.has_radicals())
        return std::nullopt;
    if (auto c = p.constant_value())
        return Certificate{*c > 0 ? 1 : -1, true};
    int s = even_monomial_sign(p);
    if (s == 0)
        return std::nullopt;
    return Certificate{s, zero_set_within(p, d) == Tri::Yes};
}

SignKind kind_of(int sign, bool definite) {
    if (sign > 0)
        return definite ? SignKind::PositiveDefinite : SignKind::PositiveConstSign;
    return definite ? SignKind::NegativeDefinite : SignKind::NegativeConstSign;
}

SignVerdict sample(const ScaledFraction &e, const Domain &d, const SignOptions &opt) {
    RationalSampler sampler(opt.seed);
    SignVerdict v;
    std::optional<SignWitness> pos, neg;
    for (int i = 0; i < opt.samples && !(pos && neg); ++i) {
        auto pt = sampler.next_point(d.n);
        if (!d.contains(pt))
            continue;
        double val;
        try {
            val = to_double(e.evaluate(std::span<const Rational>(pt)));
        } catch (const EvaluationSingular &) {
            continue;
        } catch (const DomainError &) {
            continue;
        }
        if (val > 0 && !pos)
            pos = SignWitness{pt, val};
        else if (val < 0 && !neg)
            neg = SignWitness{pt, val};
    }
    if (pos && neg) {
        v.kind = SignKind::Indefinite;
        v.witnesses = {*pos, *neg};
    }
    return v;
}

} // namespace

int even_monomial_sign(const Polynomial &p) {
    if (p.is_zero() || p.has_radicals())
        return 0;
    int s = 0;
    for (const auto &[e, c] : p.terms()) {
        for (int k : e)
            if (k % 2)
                return 0;
        int cs = c > 0 ? 1 : -1;
        if (s != 0 && cs != s)
            return 0;
        s = cs;
    }
    return s;
}

Tri zero_set_within(const Polynomial &p, const Domain &d) {
    if (even_monomial_sign(p) == 0)
        return Tri::Unknown;
    auto sup = supports(p);
    if (std::any_of(sup.begin(), sup.end(), [](const auto &s) { return s.empty(); }))
        return Tri::Yes; // nonzero constant term: no zeros at all
    for (const auto &h : minimal_hitting_sets(sup, p.vars()->n()))
        if (!subspace_excluded(h, d))
            return Tri::No;
    return Tri::Yes;
}

std::optional<int> zero_set_dimension(const Polynomial &p) {
    if (even_monomial_sign(p) == 0)
        return std::nullopt;
    auto sup = supports(p);
    if (std::any_of(sup.begin(), sup.end(), [](const auto &s) { return s.empty(); }))
        return -1;
    int n = static_cast<int>(p.vars()->n());
    int dim = -1;
    for (const auto &h : minimal_hitting_sets(sup, n))
        dim = std::max(dim, n - static_cast<int>(h.size()));
    return dim;
}

SignVerdict sign_of(const ScaledFraction &e, const Domain &d, const SignOptions &opt) {
    SignVerdict v;
    if (e.is_zero()) {
        v.kind = SignKind::IdenticallyZero;
        return v;
    }
    bool bases_ok = true;
    for (const auto &pf : e.powers())
        bases_ok = bases_ok && d.is_positive_base(pf.base);
    if (!bases_ok)
        return v;
    auto num = polynomial_certificate(e.frac().num(), d);
    auto den = polynomial_certificate(e.frac().den(), d);
    if (num && den && den->definite) {
        v.kind = kind_of(num->sign * den->sign, num->definite);
        return v;
    }
    return sample(e, d, opt);
}

} // namespace cyclebound
