#pragma once

#include "cyclebound/manifest/expr.hpp"
#include "cyclebound/manifest/manifest.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cbtest {

using namespace cyclebound;

/// Variables x1..xn (or the given names), an optional positive base bound to `g`.
struct Space {
    VarTablePtr vars;
    ExprContext ctx;

    explicit Space(std::vector<std::string> names, std::vector<std::string> times = {});
    static Space xs(std::size_t n);

    /// Binds a name to a polynomial; with positive=true it may carry negative powers.
    Space &define(const std::string &name, const std::string &expr, bool positive = false);

    Polynomial poly(const std::string &e) const { return parse_polynomial(e, ctx); }
    ScaledFraction scalar(const std::string &e) const { return parse_scalar(e, ctx); }
    KForm form(const std::string &e) const { return parse_form(e, ctx); }
    VectorField field(const std::vector<std::string> &comps) const;
};

/// Reads a file next to the test sources.
std::string read_file(const std::string &path);
std::string fixture_path(const std::string &name);
Manifest load_fixture(const std::string &name);

} // namespace cbtest
