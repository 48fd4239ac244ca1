#pragma once

#include "cyclebound/errors.hpp"
#include "cyclebound/ring/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclebound {

/// One exponent per base variable followed by one per radical symbol.
using Exponents = std::vector<int>;

/// Graded-lexicographic order: total degree first, then x1 > x2 > ... > s1 > ...
struct GrlexLess {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

/// Ascending grlex; the leading term is the last entry.
using TermMap = std::map<Exponents, Rational, GrlexLess>;

struct RadicalDef {
    std::string symbol;
    TermMap square; // exponent vectors cover base variables only
};

/// Variable names for a problem: x1..xn, optional times t1..tm, adjoined square roots.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> base_vars, std::vector<std::string> time_vars = {});

    std::size_t n() const { return base_.size(); }
    std::size_t radical_count() const { return radicals_.size(); }
    std::size_t slots() const { return base_.size() + radicals_.size(); }

    const std::vector<std::string> &base_vars() const { return base_; }
    const std::vector<std::string> &time_vars() const { return time_; }
    const std::vector<RadicalDef> &radicals() const { return radicals_; }

    /// Name of an exponent slot (base variable or radical symbol).
    const std::string &slot_name(std::size_t slot) const;

    std::optional<std::size_t> base_index(std::string_view name) const;
    std::optional<std::size_t> time_index(std::string_view name) const;
    std::optional<std::size_t> radical_index(std::string_view name) const;

    /// Adjoins s with s^2 = square. square must be nonzero and use base variables only.
    void add_radical(std::string symbol, TermMap square);

private:
    bool name_taken(std::string_view name) const;

    std::vector<std::string> base_;
    std::vector<std::string> time_;
    std::vector<RadicalDef> radicals_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VarTablePtr vars);
    Polynomial(VarTablePtr vars, TermMap terms);

    static Polynomial constant(VarTablePtr vars, const Rational &c);
    /// x_slot, where slot indexes base variables then radicals.
    static Polynomial variable(VarTablePtr vars, std::size_t slot);

    const VarTablePtr &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    int total_degree() const;
    /// Highest exponent of one slot.
    int degree_in(std::size_t slot) const;
    bool has_radicals() const;
    bool has_radical(std::size_t radical) const;

    const Exponents &leading_exponents() const;
    const Rational &leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial &a, const Polynomial &b);

    Polynomial pow(unsigned k) const;

    /// Flips the sign of every term odd in the given radical.
    Polynomial conjugate(std::size_t radical) const;

    /// Derivative treating radical symbols as constants (see partial_derivative for the full rule).
    Polynomial derivative_plain(std::size_t var) const;

    /// Terms containing the given radical symbol.
    Polynomial radical_part(std::size_t radical) const;

    /// Exact value at a rational point; nullopt when radicals are present.
    std::optional<Rational> evaluate_exact(std::span<const Rational> point) const;
    /// Throws DomainError when a radicand is negative at the point.
    double evaluate(std::span<const double> point) const;

    /// Canonical text, leading (grlex-largest) term first.
    std::string to_string() const;

    /// Strict weak order on term maps; used to sort power bases.
    friend bool structural_less(const Polynomial &a, const Polynomial &b);

    /// The radicand of radical k as a polynomial over this table.
    static Polynomial radicand(const VarTablePtr &vars, std::size_t radical);

private:
    void check_compatible(const Polynomial &o) const;
    void reduce_radicals();

    VarTablePtr vars_;
    TermMap terms_;
};

/// q with a = q*b when it exists. b = 0 is a usage error.
std::optional<Polynomial> exact_divide(const Polynomial &a, const Polynomial &b);

/// Multivariate division by one radical-free divisor under grlex: a = q*b + r.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial &a, const Polynomial &b);

/// Largest monomial dividing every term (base variables only).
Exponents monomial_content(const Polynomial &p);

/// p with the given monomial divided out. Every term must be divisible.
Polynomial divide_monomial(const Polynomial &p, const Exponents &m);

} // namespace cyclebound
