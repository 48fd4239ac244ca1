#pragma once

#include "cyclebound/sign.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclebound {

/// pass/fail/unknown gate the conclusion; assumed and advisory never do.
enum class Verdict { Pass, Fail, Unknown, Assumed, Advisory };

std::string to_string(Verdict v);

struct Hypothesis {
    std::string desc;
    Verdict verdict = Verdict::Unknown;
    std::string witness;
};

enum class ConclusionType { Bound, Absence, NotApplicable, Classification };

std::string to_string(ConclusionType t);

struct Conclusion {
    ConclusionType type = ConclusionType::NotApplicable;
    std::optional<int> bound;
    std::string text;
};

struct CheckReport {
    std::string theorem_id;
    std::string object_kind;
    std::vector<Hypothesis> hypotheses;
    Conclusion conclusion;
    std::vector<std::pair<std::string, std::string>> inputs_echo;
    double timing_ms = 0;

    Hypothesis &add(std::string desc, Verdict v, std::string witness = {});
    void echo(std::string key, std::string value);
    /// First hypothesis that blocks a Bound/Absence conclusion, if any.
    const Hypothesis *blocking() const;
};

/// Installs a conclusion, downgrading Bound/Absence to NotApplicable when a hypothesis blocks it.
void conclude(CheckReport &r, Conclusion c);

Conclusion bound_conclusion(int r, const std::string &object_kind, const std::string &where);
Conclusion absence_conclusion(const std::string &object_kind, const std::string &where);
Conclusion not_applicable(std::string reason);

struct CheckContext {
    Domain domain;
    SignOptions sign;
};

enum class SignRequirement { Definite, ConstSign, ConstSignOrZero, Zero };

/// Runs sign_of and grades the verdict; the witness shows the expression and verdict.
Hypothesis sign_hypothesis(std::string desc, const ScaledFraction &e, SignRequirement req,
                           const CheckContext &ctx);

std::string describe(const SignVerdict &v);

/// Rank of pi_{nu-1} on the context domain as a gating hypothesis.
Hypothesis rank_hypothesis(const CheckContext &ctx, int nu, std::optional<int> &rank_out);

/// Denominators nonvanishing and power bases declared positive. Uncertified cases are assumed.
Hypothesis smoothness_hypothesis(std::string desc, const std::vector<ScaledFraction> &values,
                                 const CheckContext &ctx);

/// 17 significant digits.
std::string format_double(double v);

} // namespace cyclebound
