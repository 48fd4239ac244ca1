#pragma once

#include "cyclebound/ring/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cyclebound {

/// Rational points with denominators <= max_den in the box [-bound, bound]^n.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int max_den = 16, int bound = 10)
        : rng_(seed), max_den_(max_den), bound_(bound) {}

    Rational next_coordinate();
    std::vector<Rational> next_point(std::size_t n);
    /// Uniform integer in [lo, hi].
    long next_int(long lo, long hi);

private:
    std::mt19937_64 rng_;
    int max_den_;
    int bound_;
};

} // namespace cyclebound
