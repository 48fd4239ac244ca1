#include "cyclebound/manifest/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cyclebound {

std::string to_string(SystemKind k) {
    switch (k) {
    case SystemKind::Ode:
        return "ode";
    case SystemKind::Total:
        return "total";
    case SystemKind::Partial:
        return "partial";
    case SystemKind::Pfaff:
        return "pfaff";
    case SystemKind::Exterior:
        return "exterior";
    case SystemKind::LinearTotal:
        return "linear_total";
    }
    return "ode";
}

void manifest_error(const BlockValue &v, const std::string &what) { throw ParseError(what, v.line, v.column); }

namespace {

template <class F>
auto located(const BlockValue &v, F &&fn) -> decltype(fn(std::string_view{})) {
    if (!v.is_scalar())
        manifest_error(v, "expected an expression");
    try {
        return fn(std::string_view(v.text));
    } catch (const ParseError &e) {
        // expression columns are relative to the text; strings start one past the quote
        int shift = v.kind == BlockValue::Kind::String ? 0 : -1;
        // strings may span lines; map the offset back into the file
        std::size_t off = static_cast<std::size_t>(std::max(e.column() - 1, 0));
        std::size_t nl = v.text.rfind('\n', off == 0 ? 0 : off - 1);
        if (off == 0 || nl == std::string::npos)
            throw ParseError(e.message(), v.line, v.column + e.column() + shift);
        int extra = static_cast<int>(std::count(v.text.begin(), v.text.begin() + static_cast<long>(nl) + 1, '\n'));
        throw ParseError(e.message(), v.line + extra, static_cast<int>(off - nl));
    } catch (const Error &e) {
        throw ParseError(e.what(), v.line, v.column);
    }
}

std::vector<std::string> ident_list(const BlockValue &v) {
    if (v.kind != BlockValue::Kind::List)
        manifest_error(v, "expected a list of names");
    std::vector<std::string> out;
    for (const auto &e : v.list) {
        if (e.kind != BlockValue::Kind::Ident && e.kind != BlockValue::Kind::String)
            manifest_error(e, "expected a name");
        out.push_back(e.text);
    }
    return out;
}

Rational number_of(const BlockValue &v) {
    if (v.kind != BlockValue::Kind::Number && v.kind != BlockValue::Kind::String)
        manifest_error(v, "expected a number");
    try {
        return parse_rational(v.text);
    } catch (const Error &e) {
        manifest_error(v, e.what());
    }
}

double double_of(const BlockValue &v) {
    if (v.kind != BlockValue::Kind::Number)
        manifest_error(v, "expected a number");
    try {
        std::size_t used = 0;
        double d = std::stod(v.text, &used);
        if (used != v.text.size()) {
            // allow p/q
            return to_double(Value(parse_rational(v.text)));
        }
        return d;
    } catch (const std::exception &) {
        manifest_error(v, "bad number '" + v.text + "'");
    }
}

const BlockValue &list_of(const BlockValue &v) {
    if (v.kind != BlockValue::Kind::List)
        manifest_error(v, "expected a list");
    return v;
}

const BlockValue &required(const BlockValue &block, std::string_view key) {
    const BlockItem *it = block.find(key);
    if (!it)
        manifest_error(block, "missing '" + std::string(key) + "'");
    return it->value;
}

void expect_block(const BlockItem &it) {
    if (it.value.kind != BlockValue::Kind::Block)
        manifest_error(it.value, "'" + it.key + "' must be a block");
}

void only_keys(const BlockValue &block, std::initializer_list<std::string_view> keys, const std::string &where) {
    for (const auto &it : block.items)
        if (std::find(keys.begin(), keys.end(), it.key) == keys.end())
            throw ParseError("unknown key '" + it.key + "' in " + where, it.line, it.column);
}

VectorField field_of(const Manifest &m, const BlockValue &v) {
    const BlockValue &l = list_of(v);
    if (l.list.size() != m.vars->n())
        manifest_error(v, "expected " + std::to_string(m.vars->n()) + " components");
    VectorField f;
    for (const auto &e : l.list)
        f.components.emplace_back(manifest_polynomial(m, e));
    return f;
}

std::vector<KForm> polynomial_forms(const Manifest &m, const BlockValue &v) {
    std::vector<KForm> out;
    for (const auto &e : list_of(v).list) {
        KForm f = manifest_form(m, e);
        for (const auto &[idx, c] : f.coeffs())
            if (!c.is_polynomial())
                manifest_error(e, "system coefficients must be polynomials");
        out.push_back(std::move(f));
    }
    return out;
}

Matrix matrix_of(const BlockValue &v) {
    Matrix a;
    for (const auto &row : list_of(v).list) {
        std::vector<Rational> r;
        for (const auto &e : list_of(row).list)
            r.push_back(number_of(e));
        a.push_back(std::move(r));
    }
    return a;
}

void load_system(Manifest &m, const BlockValue &b) {
    const BlockValue &kind = required(b, "kind");
    std::string k = kind.text;
    if (k == "ode") {
        only_keys(b, {"kind", "f"}, "system");
        m.kind = SystemKind::Ode;
        // build the field first: a throw inside the aggregate initializer leaks the copied
        // table pointer under GCC 11
        VectorField f = field_of(m, required(b, "f"));
        m.ode = OdeSystem{m.vars, std::move(f)};
        m.ode.validate();
    } else if (k == "total" || k == "partial") {
        const char *key = k == "total" ? "columns" : "operators";
        only_keys(b, {"kind", key}, "system");
        std::vector<VectorField> cols;
        for (const auto &c : list_of(required(b, key)).list)
            cols.push_back(field_of(m, c));
        if (k == "total") {
            m.kind = SystemKind::Total;
            m.total = TotalSystem{m.vars, cols};
            if (!m.vars->time_vars().empty() && m.vars->time_vars().size() != cols.size())
                manifest_error(required(b, key), "number of columns differs from the time variables");
            m.total.validate();
        } else {
            m.kind = SystemKind::Partial;
            m.partial = PartialSystem{m.vars, cols};
            m.partial.validate();
        }
    } else if (k == "pfaff" || k == "exterior") {
        only_keys(b, {"kind", "forms"}, "system");
        auto forms = polynomial_forms(m, required(b, "forms"));
        if (k == "pfaff") {
            m.kind = SystemKind::Pfaff;
            m.pfaff = PfaffSystem{m.vars, forms};
            m.pfaff.validate();
        } else {
            m.kind = SystemKind::Exterior;
            m.exterior = ExteriorSystem{m.vars, forms};
            m.exterior.validate();
        }
    } else if (k == "linear_total") {
        only_keys(b, {"kind", "matrices"}, "system");
        m.kind = SystemKind::LinearTotal;
        for (const auto &a : list_of(required(b, "matrices")).list)
            m.linear.matrices.push_back(matrix_of(a));
        m.linear.validate();
        if (m.linear.n() != m.vars->n())
            manifest_error(b, "matrix size differs from the number of variables");
    } else {
        manifest_error(kind, "unknown system kind '" + k + "'");
    }
}

ProbeSpec load_probe(const Manifest &m, const BlockItem &it) {
    expect_block(it);
    const BlockValue &b = it.value;
    only_keys(b, {"candidate", "start", "horizon", "step", "column", "direction"}, "probe");
    ProbeSpec p;
    p.line = it.line;
    p.candidate = required(b, "candidate").text;
    m.candidate(p.candidate);
    for (const auto &e : list_of(required(b, "start")).list)
        p.start.push_back(double_of(e));
    if (p.start.size() != m.vars->n())
        manifest_error(required(b, "start"), "start point has the wrong dimension");
    if (const auto *h = b.find("horizon"))
        p.horizon = double_of(h->value);
    if (const auto *h = b.find("step"))
        p.step = double_of(h->value);
    if (const auto *c = b.find("column")) {
        Rational j = number_of(c->value);
        if (!is_integer(j) || j < 1)
            manifest_error(c->value, "column must be a positive integer");
        p.column = static_cast<std::size_t>(to_long(j) - 1);
    }
    if (const auto *d = b.find("direction")) {
        if (d->value.text != "forward" && d->value.text != "backward")
            manifest_error(d->value, "direction must be forward or backward");
        p.backward = d->value.text == "backward";
    }
    return p;
}

} // namespace

KForm manifest_form(const Manifest &m, const BlockValue &v) {
    return located(v, [&](std::string_view s) { return parse_form(s, m.ctx); });
}

KForm manifest_form(const Manifest &m, const BlockValue &v, int degree) {
    KForm f = manifest_form(m, v);
    if (f.is_zero())
        return KForm(m.vars, degree);
    if (f.degree() != degree)
        manifest_error(v, "expected a " + std::to_string(degree) + "-form, got a " + std::to_string(f.degree()) +
                              "-form");
    return f;
}

ScaledFraction manifest_scalar(const Manifest &m, const BlockValue &v) {
    return located(v, [&](std::string_view s) { return parse_scalar(s, m.ctx); });
}

Polynomial manifest_polynomial(const Manifest &m, const BlockValue &v) {
    return located(v, [&](std::string_view s) { return parse_polynomial(s, m.ctx); });
}

Domain parse_domain(const Manifest &m, const BlockValue &b, const Domain &base) {
    only_keys(b, {"exclude_points", "exclude_zero", "ranks", "positive_bases", "region"}, "domain");
    Domain d;
    d.n = m.vars->n();
    d.positive_bases = base.positive_bases;
    if (const auto *it = b.find("exclude_points")) {
        for (const auto &p : list_of(it->value).list) {
            std::vector<Rational> pt;
            for (const auto &c : list_of(p).list)
                pt.push_back(number_of(c));
            if (pt.size() != d.n)
                manifest_error(p, "excluded point has the wrong dimension");
            d.excluded_points.push_back(std::move(pt));
        }
    }
    if (const auto *it = b.find("exclude_zero")) {
        const BlockValue &l = list_of(it->value);
        bool nested = !l.list.empty() && l.list.front().kind == BlockValue::Kind::List;
        std::vector<const BlockValue *> groups;
        if (nested)
            for (const auto &g : l.list)
                groups.push_back(&g);
        else
            groups.push_back(&l);
        for (const auto *g : groups) {
            std::vector<int> idx;
            for (const auto &name : ident_list(*g)) {
                auto i = m.vars->base_index(name);
                if (!i)
                    manifest_error(*g, "unknown variable '" + name + "'");
                idx.push_back(static_cast<int>(*i));
            }
            std::sort(idx.begin(), idx.end());
            d.excluded_subspaces.push_back(std::move(idx));
        }
    }
    if (const auto *it = b.find("ranks")) {
        expect_block(*it);
        for (const auto &r : it->value.items) {
            Rational nu = parse_rational(r.key);
            Rational rank = number_of(r.value);
            if (!is_integer(nu) || !is_nonnegative_integer(rank))
                manifest_error(r.value, "ranks map dimensions to nonnegative integers");
            d.declared_ranks[static_cast<int>(to_long(nu))] = static_cast<int>(to_long(rank));
        }
    }
    if (const auto *it = b.find("positive_bases")) {
        for (const auto &e : list_of(it->value).list) {
            Polynomial p = manifest_polynomial(m, e);
            if (!d.is_positive_base(p))
                d.positive_bases.push_back(p);
        }
    }
    if (const auto *it = b.find("region"))
        for (const auto &e : list_of(it->value).list)
            d.region.push_back(manifest_polynomial(m, e));
    try {
        d.validate();
    } catch (const Error &e) {
        manifest_error(b, e.what());
    }
    return d;
}

const std::vector<KForm> &Manifest::forms() const {
    if (kind == SystemKind::Pfaff)
        return pfaff.forms;
    if (kind == SystemKind::Exterior)
        return exterior.zetas;
    throw UsageError("the system has no form equations");
}

std::vector<VectorField> Manifest::operators() const {
    switch (kind) {
    case SystemKind::Ode:
        return {ode.f};
    case SystemKind::Total:
        return total.columns;
    case SystemKind::Partial:
        return partial.operators;
    default:
        throw UsageError("the system has no operators");
    }
}

const Polynomial &Manifest::candidate(std::string_view name) const {
    for (const auto &[n, w] : candidates)
        if (n == name)
            return w;
    throw UsageError("unknown candidate '" + std::string(name) + "'");
}

Manifest load_manifest(std::string_view text) {
    BlockValue root = parse_blocks(text);
    for (const auto &it : root.items) {
        static const std::set<std::string> known{"vars",      "radical", "define", "domain",
                                                 "system",    "candidate", "check", "probe"};
        if (!known.count(it.key))
            throw ParseError("unknown block '" + it.key + "'", it.line, it.column);
    }
    Manifest m;

    const BlockItem *vars = root.find("vars");
    if (!vars)
        throw ParseError("missing 'vars' block", 1, 1);
    expect_block(*vars);
    only_keys(vars->value, {"base", "time"}, "vars");
    VarTable table = [&] {
        std::vector<std::string> time;
        if (const auto *t = vars->value.find("time"))
            time = ident_list(t->value);
        try {
            return VarTable(ident_list(required(vars->value, "base")), time);
        } catch (const Error &e) {
            manifest_error(vars->value, e.what());
        }
    }();
    for (const auto *r : root.find_all("radical")) {
        expect_block(*r);
        if (!r->label)
            throw ParseError("radical needs a symbol", r->line, r->column);
        only_keys(r->value, {"square"}, "radical");
        Manifest base_only;
        base_only.vars = std::make_shared<const VarTable>(VarTable(table.base_vars()));
        base_only.ctx.vars = base_only.vars;
        Polynomial sq = manifest_polynomial(base_only, required(r->value, "square"));
        try {
            table.add_radical(*r->label, sq.terms());
        } catch (const Error &e) {
            throw ParseError(e.what(), r->line, r->column);
        }
    }
    m.vars = std::make_shared<const VarTable>(std::move(table));
    m.ctx.vars = m.vars;

    const BlockItem *dom = root.find("domain");
    if (dom)
        expect_block(*dom);
    std::set<std::string> positive_names;
    if (dom)
        if (const auto *pb = dom->value.find("positive_bases"))
            for (const auto &e : list_of(pb->value).list)
                if (e.kind == BlockValue::Kind::Ident)
                    positive_names.insert(e.text);

    for (const auto *def : root.find_all("define")) {
        expect_block(*def);
        for (const auto &item : def->value.items) {
            if (m.vars->base_index(item.key) || m.vars->radical_index(item.key) || m.ctx.names.count(item.key))
                throw ParseError("name '" + item.key + "' is already defined", item.line, item.column);
            KForm f = manifest_form(m, item.value);
            if (positive_names.count(item.key)) {
                if (f.degree() != 0 || !f.coefficient({}).is_polynomial())
                    manifest_error(item.value, "a positive base must be a polynomial");
                m.ctx.positive_bases.push_back(*f.coefficient({}).as_polynomial());
            }
            m.ctx.names.emplace(item.key, std::move(f));
        }
    }

    Domain base;
    base.n = m.vars->n();
    base.positive_bases = m.ctx.positive_bases;
    if (dom) {
        m.domain = parse_domain(m, dom->value, base);
    } else {
        m.domain = base;
    }
    m.ctx.positive_bases = m.domain.positive_bases;

    const BlockItem *sys = root.find("system");
    if (!sys)
        throw ParseError("missing 'system' block", 1, 1);
    expect_block(*sys);
    load_system(m, sys->value);

    for (const auto *c : root.find_all("candidate")) {
        if (!c->label)
            throw ParseError("candidate needs a name", c->line, c->column);
        const BlockValue &v = c->value.kind == BlockValue::Kind::Block ? required(c->value, "w") : c->value;
        m.candidates.emplace_back(*c->label, manifest_polynomial(m, v));
    }
    for (const auto *p : root.find_all("probe"))
        m.probes.push_back(load_probe(m, *p));
    for (const auto *c : root.find_all("check")) {
        expect_block(*c);
        required(c->value, "theorem");
        m.checks.push_back(*c);
    }
    return m;
}

Manifest load_manifest_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_manifest(ss.str());
}

} // namespace cyclebound
