#include "cyclebound/sign/domain.hpp"
#include "cyclebound/sign/sampler.hpp"

#include <algorithm>
#include <set>

namespace cyclebound {

long RationalSampler::next_int(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational RationalSampler::next_coordinate() {
    long den = next_int(1, max_den_);
    long num = next_int(-bound_ * den, bound_ * den);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Rational> RationalSampler::next_point(std::size_t n) {
    std::vector<Rational> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        p.push_back(next_coordinate());
    return p;
}

void Domain::validate() const {
    if (n == 0)
        throw UsageError("domain dimension must be positive");
    std::set<std::vector<Rational>> seen;
    for (const auto &p : excluded_points) {
        if (p.size() != n)
            throw UsageError("excluded point has the wrong dimension");
        if (!seen.insert(p).second)
            throw UsageError("duplicate excluded point");
    }
    for (const auto &s : excluded_subspaces) {
        if (s.empty())
            throw UsageError("excluded subspace must fix at least one coordinate");
        for (int i : s)
            if (i < 0 || static_cast<std::size_t>(i) >= n)
                throw UsageError("excluded subspace index out of range");
    }
    for (const auto &[nu, r] : declared_ranks) {
        if (nu < 1 || static_cast<std::size_t>(nu) > n)
            throw UsageError("declared rank for an invalid dimension");
        if (r < 0)
            throw UsageError("declared ranks must be nonnegative");
    }
    for (const auto &r : region)
        if (r.has_radicals())
            throw UsageError("region polynomials must not use radicals");
}

bool Domain::contains(const std::vector<Rational> &point) const {
    for (const auto &p : excluded_points)
        if (p == point)
            return false;
    for (const auto &s : excluded_subspaces)
        if (std::all_of(s.begin(), s.end(), [&](int i) { return point[i] == 0; }))
            return false;
    for (const auto &r : region) {
        auto v = r.evaluate_exact(std::span<const Rational>(point));
        if (!v || *v <= 0)
            return false;
    }
    return true;
}

bool Domain::is_positive_base(const Polynomial &p) const {
    for (const auto &b : positive_bases)
        if (b == p)
            return true;
    return false;
}

std::string Domain::describe() const {
    std::string s = "R^" + std::to_string(n);
    std::vector<std::string> parts;
    for (const auto &p : excluded_points) {
        std::string t = "(";
        for (std::size_t i = 0; i < p.size(); ++i)
            t += (i ? "," : "") + to_string(p[i]);
        parts.push_back(t + ")");
    }
    for (const auto &sub : excluded_subspaces) {
        std::string t = "{";
        for (std::size_t i = 0; i < sub.size(); ++i)
            t += (i ? "=" : "x") + std::string(i ? "x" : "") + std::to_string(sub[i] + 1);
        parts.push_back(t + "=0}");
    }
    if (!parts.empty()) {
        s += " \\ {";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? ", " : "") + parts[i];
        s += "}";
    }
    for (const auto &r : region)
        s += " : " + r.to_string() + " > 0";
    return s;
}

std::optional<int> homotopy_rank(const Domain &d, int nu) {
    if (auto it = d.declared_ranks.find(nu); it != d.declared_ranks.end())
        return it->second;
    if (d.is_whole_space())
        return 0;
    const auto unu = static_cast<std::size_t>(nu);
    // R^n minus k points is a wedge of k copies of S^(n-1): nothing below the top group
    if (d.excluded_subspaces.empty() && d.region.empty() && nu >= 1) {
        if (unu == d.n)
            return static_cast<int>(d.excluded_points.size());
        if (unu < d.n)
            return 0;
    }
    // R^n minus one coordinate subspace of codimension c retracts onto S^(c-1)
    if (d.excluded_points.empty() && d.excluded_subspaces.size() == 1 && d.region.empty() && nu >= 1) {
        std::size_t c = d.excluded_subspaces.front().size();
        if (unu == c)
            return 1;
        if (unu < c)
            return 0;
    }
    return std::nullopt;
}

} // namespace cyclebound
