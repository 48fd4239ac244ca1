#include "cyclebound/ring/rational.hpp"

#include "cyclebound/errors.hpp"

#include <cctype>

namespace cyclebound {

std::string to_string(const Rational &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    bool neg = false;
    std::string_view s = text;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b))
            throw UsageError("malformed rational '" + std::string(text) + "'");
        mpz_class den{std::string(b)};
        if (den == 0)
            throw UsageError("zero denominator in '" + std::string(text) + "'");
        out = Rational(mpz_class(std::string(a)), den);
        out.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto a = s.substr(0, dot), b = s.substr(dot + 1);
        if ((a.empty() && b.empty()) || (!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)))
            throw UsageError("malformed decimal '" + std::string(text) + "'");
        mpz_class whole{a.empty() ? std::string("0") : std::string(a)};
        mpz_class frac{b.empty() ? std::string("0") : std::string(b)};
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        out = Rational(whole * scale + frac, scale);
        out.canonicalize();
    } else {
        if (!all_digits(s))
            throw UsageError("malformed number '" + std::string(text) + "'");
        out = Rational(mpz_class(std::string(s)));
    }
    return neg ? Rational(-out) : out;
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

bool is_nonnegative_integer(const Rational &q) { return q.get_den() == 1 && q >= 0; }

long to_long(const Rational &q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw UsageError("rational " + to_string(q) + " is not a machine integer");
    return q.get_num().get_si();
}

Rational rational_pow(const Rational &base, long exponent) {
    if (exponent < 0) {
        if (base == 0)
            throw EvaluationSingular("zero raised to a negative power");
        return rational_pow(Rational(1) / base, -exponent);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

} // namespace cyclebound
