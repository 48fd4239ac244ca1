#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cbtest {

Space::Space(std::vector<std::string> names, std::vector<std::string> times)
    : vars(std::make_shared<VarTable>(std::move(names), std::move(times))) {
    ctx.vars = vars;
}

Space Space::xs(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return Space(std::move(names));
}

Space &Space::define(const std::string &name, const std::string &expr, bool positive) {
    KForm value = parse_form(expr, ctx);
    if (positive) {
        auto p = value.coefficient({}).as_polynomial();
        if (!p)
            throw std::runtime_error("positive base must be a polynomial: " + name);
        ctx.positive_bases.push_back(*p);
    }
    ctx.names.insert_or_assign(name, std::move(value));
    return *this;
}

VectorField Space::field(const std::vector<std::string> &comps) const {
    VectorField f;
    for (const auto &c : comps)
        f.components.push_back(scalar(c));
    return f;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture_path(const std::string &name) { return std::string(FIXTURE_DIR) + "/" + name; }

Manifest load_fixture(const std::string &name) { return load_manifest_file(fixture_path(name)); }

} // namespace cbtest
