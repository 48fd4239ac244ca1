#pragma once

#include "cyclebound/sign/domain.hpp"

#include <cstdint>
#include <string>

namespace cyclebound {

enum class SignKind {
    PositiveDefinite,
    NegativeDefinite,
    PositiveConstSign,
    NegativeConstSign,
    IdenticallyZero,
    Indefinite,
    Unknown,
};

std::string to_string(SignKind k);

struct SignWitness {
    std::vector<Rational> point;
    double value;
};

struct SignVerdict {
    SignKind kind = SignKind::Unknown;
    // Indefinite only: a point with positive value, then one with negative value.
    std::vector<SignWitness> witnesses;

    bool definite() const { return kind == SignKind::PositiveDefinite || kind == SignKind::NegativeDefinite; }
    /// Definite or const-sign (the nu-constant-sign certificate).
    bool const_sign() const {
        return definite() || kind == SignKind::PositiveConstSign || kind == SignKind::NegativeConstSign;
    }
    int sign() const;
};

struct SignOptions {
    std::uint64_t seed = 42;
    int samples = 1000;
};

/// Syntactic certificate first, random sampling only to find Indefinite witnesses.
SignVerdict sign_of(const ScaledFraction &e, const Domain &d, const SignOptions &opt = {});

enum class Tri { Yes, No, Unknown };

/// Whether the common zero set of the monomials of an even, same-signed polynomial lies in
/// the excluded part of the domain. Other polynomials give Unknown.
Tri zero_set_within(const Polynomial &p, const Domain &d);

/// Dimension of the zero set of an even, same-signed polynomial (-1 when empty).
std::optional<int> zero_set_dimension(const Polynomial &p);

/// The even same-sign certificate: +1/-1, or 0 when it does not apply.
int even_monomial_sign(const Polynomial &p);

} // namespace cyclebound
