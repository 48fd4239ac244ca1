#pragma once

#include "cyclebound/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cyclebound {

/// R^n minus finitely many points and coordinate subspaces, optionally cut to an open region.
struct Domain {
    std::size_t n = 0;
    std::vector<std::vector<Rational>> excluded_points;
    /// Each entry lists 0-based indices i; the set {x : x_i = 0 for all listed i} is removed.
    std::vector<std::vector<int>> excluded_subspaces;
    std::map<int, int> declared_ranks; // nu -> rank of pi_{nu-1}
    std::vector<Polynomial> positive_bases;
    /// Optional open region: every polynomial here is > 0 on the domain (e.g. an annulus).
    std::vector<Polynomial> region;

    void validate() const;
    bool contains(const std::vector<Rational> &point) const;
    bool is_whole_space() const {
        return excluded_points.empty() && excluded_subspaces.empty() && region.empty();
    }
    bool is_positive_base(const Polynomial &p) const;
    /// "R^4 \ {(0,0,0,0)}" style description.
    std::string describe() const;
};

std::optional<int> homotopy_rank(const Domain &d, int nu);

} // namespace cyclebound
