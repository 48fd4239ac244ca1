#include "cyclebound/manifest/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace cyclebound {

namespace {

struct CheckInput {
    const Manifest &m;
    const BlockValue &b;
    CheckContext ctx;
    std::string id;

    const BlockValue *get(std::string_view key) const {
        const BlockItem *it = b.find(key);
        return it ? &it->value : nullptr;
    }
    const BlockValue &need(std::string_view key) const {
        if (const auto *v = get(key))
            return *v;
        manifest_error(b, id + " needs '" + std::string(key) + "'");
    }
    ScaledFraction scalar(std::string_view key, const char *fallback) const {
        if (const auto *v = get(key))
            return manifest_scalar(m, *v);
        if (!fallback)
            need(key);
        BlockValue d;
        d.kind = BlockValue::Kind::String;
        d.text = fallback;
        return manifest_scalar(m, d);
    }
    std::size_t column() const {
        const BlockValue *v = get("column");
        if (!v)
            return 0;
        Rational j = parse_rational(v->text);
        if (!is_integer(j) || j < 1)
            manifest_error(*v, "column must be a positive integer");
        return static_cast<std::size_t>(to_long(j) - 1);
    }
    int integer(std::string_view key) const {
        const BlockValue &v = need(key);
        Rational q = parse_rational(v.text);
        if (!is_integer(q))
            manifest_error(v, "expected an integer");
        return static_cast<int>(to_long(q));
    }
};

void require_kind(const CheckInput &in, std::initializer_list<SystemKind> kinds) {
    if (std::find(kinds.begin(), kinds.end(), in.m.kind) == kinds.end())
        manifest_error(in.b, in.id + " does not apply to a " + to_string(in.m.kind) + " system");
}

// Labels of the equations a plan or auxiliary map may refer to.
std::vector<std::string> equation_labels(std::size_t count, const std::vector<std::pair<int, int>> *pairs) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < count; ++j)
        out.push_back(pairs ? Sample{{(*pairs)[j].first, (*pairs)[j].second}}.label() : std::to_string(j + 1));
    return out;
}

std::size_t equation_index(const BlockValue &v, const std::string &key, const std::vector<std::string> &labels) {
    auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end())
        manifest_error(v, "no equation labelled '" + key + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

std::vector<KForm> aux_forms(const CheckInput &in, std::string_view key, const std::vector<KForm> &forms,
                             const std::vector<std::string> &labels, int shift) {
    int n = static_cast<int>(in.m.vars->n());
    std::vector<KForm> out;
    for (const auto &f : forms)
        out.emplace_back(in.m.vars, n - f.degree() - 1 + shift);
    if (const BlockItem *it = in.b.find(key)) {
        if (it->value.kind != BlockValue::Kind::Block)
            manifest_error(it->value, "'" + std::string(key) + "' maps equation labels to forms");
        for (const auto &e : it->value.items) {
            std::size_t j = equation_index(e.value, e.key, labels);
            out[j] = manifest_form(in.m, e.value, n - forms[j].degree() - 1 + shift);
        }
    }
    return out;
}

std::vector<Elimination> plan_of(const CheckInput &in, const std::vector<std::string> &labels) {
    std::vector<Elimination> plan;
    if (const BlockItem *it = in.b.find("eliminate")) {
        if (it->value.kind != BlockValue::Kind::Block)
            manifest_error(it->value, "'eliminate' maps variables to equation labels");
        for (const auto &e : it->value.items) {
            auto var = in.m.vars->base_index(e.key);
            if (!var)
                throw ParseError("unknown variable '" + e.key + "'", e.line, e.column);
            plan.push_back({*var, equation_index(e.value, e.value.text, labels)});
        }
    }
    return plan;
}

FormBoundInput form_input(const CheckInput &in, const std::vector<KForm> &forms, const char *aux_key,
                          const std::vector<std::pair<int, int>> *pairs, bool with_theta) {
    int n = static_cast<int>(in.m.vars->n());
    auto labels = equation_labels(forms.size(), pairs);
    FormBoundInput fi;
    fi.alpha = in.get("alpha") ? manifest_form(in.m, *in.get("alpha"), n - 2) : KForm(in.m.vars, n - 2);
    fi.aux = aux_forms(in, aux_key, forms, labels, 0);
    fi.plan = plan_of(in, labels);
    if (with_theta) {
        fi.theta = manifest_form(in.m, in.need("theta"), n - 2);
        fi.etas = aux_forms(in, "eta", forms, labels, -1);
    } else if (in.get("theta") || in.get("eta")) {
        manifest_error(in.b, in.id + " takes no theta; use the invariant-form variant");
    }
    return fi;
}

SampleMultipliers multipliers(const CheckInput &in, int nu) {
    std::size_t n = in.m.vars->n();
    if (nu < 1 || static_cast<std::size_t>(nu) > n)
        manifest_error(in.need("nu"), "nu out of range");
    std::map<std::string, ScaledFraction> given;
    if (const BlockItem *it = in.b.find("mu")) {
        if (it->value.kind != BlockValue::Kind::Block)
            manifest_error(it->value, "'mu' maps sample labels to multipliers");
        for (const auto &e : it->value.items)
            given.emplace(e.key, manifest_scalar(in.m, e.value));
    }
    const BlockValue *def = in.get("mu_default");
    SampleMultipliers out;
    for (const auto &xi : all_samples(n, static_cast<std::size_t>(nu))) {
        auto g = given.find(xi.label());
        if (g != given.end()) {
            out.emplace(xi.xi, g->second);
            given.erase(g);
        } else if (def) {
            out.emplace(xi.xi, manifest_scalar(in.m, *def));
        }
    }
    if (!given.empty())
        manifest_error(in.need("mu"), "'" + given.begin()->first + "' is not a sample of size " + std::to_string(nu));
    return out;
}

const KForm &single_form(const CheckInput &in, KForm &storage) {
    if (const auto *v = in.get("form")) {
        storage = manifest_form(in.m, *v, 1);
        return storage;
    }
    if (in.m.kind == SystemKind::Pfaff && in.m.pfaff.forms.size() == 1)
        return in.m.pfaff.forms[0];
    manifest_error(in.b, in.id + " needs 'form' (or a single-equation Pfaff system)");
}

Polynomial candidate_of(const CheckInput &in) {
    if (const auto *v = in.get("candidate"))
        return in.m.candidate(v->text);
    return manifest_polynomial(in.m, in.need("w"));
}

InducedSource induced_source(const CheckInput &in) {
    return in.m.kind == SystemKind::Total ? InducedSource::of(in.m.total) : InducedSource::of(in.m.partial);
}

using Runner = std::function<CheckReport(const CheckInput &)>;

struct Entry {
    std::vector<std::string_view> keys;
    Runner run;
};

const std::map<std::string, Entry, std::less<>> &table() {
    static const std::map<std::string, Entry, std::less<>> t = {
        {"T0.1", {{"phi"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             if (in.m.vars->n() != 2)
                 manifest_error(in.b, "T0.1 is planar; use T2.9");
             return check_dulac_bound(in.m.ode, in.scalar("phi", "1"), in.ctx);
         }}},
        {"T2.9", {{"phi"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             if (in.m.vars->n() == 2)
                 manifest_error(in.b, "planar systems use T0.1");
             return check_dulac_bound(in.m.ode, in.scalar("phi", "1"), in.ctx);
         }}},
        {"T0.2", {{"N"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             return check_tkachev_absence(in.m.ode, in.scalar("N", nullptr), in.ctx);
         }}},
        {"T1.1", {{"nu", "mu", "mu_default"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             int nu = in.integer("nu");
             return check_partial_div_bound(in.m.ode, nu, multipliers(in, nu), in.ctx);
         }}},
        {"T1.2", {{"column", "nu", "mu", "mu_default"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Total});
             int nu = in.integer("nu");
             return check_td_partial_div(in.m.total, in.column(), nu, multipliers(in, nu), in.ctx);
         }}},
        {"T1.3", {{"N"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Total});
             return check_orbit_absence_fn(in.m.total, in.scalar("N", nullptr), in.ctx);
         }}},
        {"T1.4", {{"form"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Total});
             return check_orbit_absence_form(in.m.total, manifest_form(in.m, in.need("form"), 1), in.ctx);
         }}},
        {"T1.5", {{}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::LinearTotal});
             return check_linear_td_eigen(in.m.linear);
         }}},
        {"T2.1", {{"alpha", "gamma", "eliminate"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Exterior});
             return check_ed_bound(in.m.exterior, form_input(in, in.m.exterior.zetas, "gamma", nullptr, false),
                                   in.ctx);
         }}},
        {"T2.2", {{"alpha", "gamma", "eliminate", "theta", "eta"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Exterior});
             return check_ed_bound(in.m.exterior, form_input(in, in.m.exterior.zetas, "gamma", nullptr, true),
                                   in.ctx);
         }}},
        {"T2.3", {{"alpha", "ell", "eliminate"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff});
             return check_pfaff_bound(in.m.pfaff, form_input(in, in.m.pfaff.forms, "ell", nullptr, false), in.ctx);
         }}},
        {"T2.4", {{"alpha", "ell", "eliminate", "theta", "eta"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff});
             return check_pfaff_bound(in.m.pfaff, form_input(in, in.m.pfaff.forms, "ell", nullptr, true), in.ctx);
         }}},
        {"T2.3D", {{"alpha", "ell", "eliminate"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             InducedPfaff p = pfaff_from_ode(in.m.ode);
             return check_ode_pfaff_bound(in.m.ode, form_input(in, p.system.forms, "ell", &p.pairs, false), in.ctx);
         }}},
        {"T2.4D", {{"alpha", "ell", "eliminate", "theta", "eta"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             InducedPfaff p = pfaff_from_ode(in.m.ode);
             return check_ode_pfaff_bound(in.m.ode, form_input(in, p.system.forms, "ell", &p.pairs, true), in.ctx);
         }}},
        {"T2.5", {{}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff});
             return classify_linear_pfaff(in.m.pfaff);
         }}},
        {"T2.6", {{"V"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff});
             VectorField V;
             const BlockValue &l = in.need("V");
             if (l.kind != BlockValue::Kind::List)
                 manifest_error(l, "V is a list of components");
             for (const auto &e : l.list)
                 V.components.push_back(manifest_scalar(in.m, e));
             return check_orthogonal_field_bound(in.m.pfaff, V, in.ctx);
         }}},
        {"T2.7", {{"g"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff});
             std::vector<ScaledFraction> g;
             const BlockValue &l = in.need("g");
             if (l.kind != BlockValue::Kind::List)
                 manifest_error(l, "g is a list of n-1 functions");
             for (const auto &e : l.list)
                 g.push_back(manifest_scalar(in.m, e));
             return check_orthogonal_combination(in.m.pfaff, g, in.ctx);
         }}},
        {"T2.8", {{"form", "mu"}, [](const CheckInput &in) {
             KForm storage;
             const KForm &w = single_form(in, storage);
             return check_solenoidal_absence(w, in.scalar("mu", "1"), in.ctx);
         }}},
        {"C2.4", {{"form"}, [](const CheckInput &in) {
             KForm storage;
             const KForm &w = single_form(in, storage);
             return check_solenoidal_absence(w, std::nullopt, in.ctx);
         }}},
        {"T2.10", {{"alpha", "beta", "branch"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             int branch = in.get("branch") ? in.integer("branch") : 1;
             return check_planar_alpha_beta(in.m.ode, in.scalar("alpha", "0"), in.scalar("beta", "0"), branch,
                                            in.ctx);
         }}},
        {"T2.11", {{"g"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode});
             return check_isolated_regular_bound(in.m.ode, in.scalar("g", "1"), in.ctx);
         }}},
        {"T2.12", {{"column", "alpha", "ell", "eliminate"}, nullptr}},
        {"T2.13", {{"column", "alpha", "ell", "eliminate", "theta", "eta"}, nullptr}},
        {"T2.16", {{"column", "alpha", "ell", "eliminate"}, nullptr}},
        {"T2.17", {{"column", "alpha", "ell", "eliminate", "theta", "eta"}, nullptr}},
        {"T2.14", {{"column", "phi"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Total});
             return check_induced_dulac(induced_source(in), in.column(), in.scalar("phi", "1"), in.ctx);
         }}},
        {"T2.18", {{"column", "phi"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Partial});
             return check_induced_dulac(induced_source(in), in.column(), in.scalar("phi", "1"), in.ctx);
         }}},
        {"T2.15", {{"g"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Total});
             std::vector<ScaledFraction> g(in.m.total.m(), ScaledFraction::constant(in.m.vars, 1));
             if (const BlockItem *it = in.b.find("g")) {
                 if (it->value.kind != BlockValue::Kind::Block)
                     manifest_error(it->value, "'g' maps column numbers to functions");
                 auto labels = equation_labels(g.size(), nullptr);
                 for (const auto &e : it->value.items)
                     g[equation_index(e.value, e.key, labels)] = manifest_scalar(in.m, e.value);
             }
             return check_td_solenoidal(in.m.total, g, in.ctx);
         }}},
        {"PI", {{"candidate", "w"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Ode, SystemKind::Total, SystemKind::Partial});
             return check_partial_integral(in.m.operators(), candidate_of(in));
         }}},
        {"INV", {{"candidate", "w", "multipliers"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff, SystemKind::Exterior});
             const auto &forms = in.m.forms();
             std::vector<ScaledFraction> c(forms.size(), ScaledFraction::constant(in.m.vars, 0));
             auto labels = equation_labels(forms.size(), nullptr);
             const BlockItem *it = in.b.find("multipliers");
             if (!it || it->value.kind != BlockValue::Kind::Block)
                 manifest_error(in.b, "INV needs a 'multipliers' block");
             for (const auto &e : it->value.items)
                 c[equation_index(e.value, e.key, labels)] = manifest_scalar(in.m, e.value);
             return check_invariant_combination(candidate_of(in), forms, c);
         }}},
        {"IF", {{"form", "F"}, [](const CheckInput &in) {
             KForm storage;
             const KForm &w = single_form(in, storage);
             return check_integrating_factor(w, manifest_polynomial(in.m, in.need("F")));
         }}},
        {"FROB", {{"form"}, [](const CheckInput &in) {
             if (in.get("form") || in.m.kind == SystemKind::Pfaff) {
                 KForm storage;
                 return check_frobenius_form(single_form(in, storage));
             }
             require_kind(in, {SystemKind::Total, SystemKind::Partial});
             return check_frobenius_operators(in.m.operators());
         }}},
        {"INVF", {{"theta", "eta"}, [](const CheckInput &in) {
             require_kind(in, {SystemKind::Pfaff, SystemKind::Exterior});
             const auto &forms = in.m.forms();
             int n = static_cast<int>(in.m.vars->n());
             KForm theta = manifest_form(in.m, in.need("theta"), n - 2);
             auto etas = aux_forms(in, "eta", forms, equation_labels(forms.size(), nullptr), -1);
             return check_form_invariance(forms, theta, etas);
         }}},
    };
    return t;
}

CheckReport induced_pfaff(const CheckInput &in) {
    bool theta = in.id == "T2.13" || in.id == "T2.17";
    bool total = in.id == "T2.12" || in.id == "T2.13";
    require_kind(in, {total ? SystemKind::Total : SystemKind::Partial});
    InducedSource src = induced_source(in);
    OdeSystem d = src.induced(in.column());
    InducedPfaff p = pfaff_from_ode(d);
    return check_induced_pfaff_bound(src, in.column(), form_input(in, p.system.forms, "ell", &p.pairs, theta),
                                     in.ctx);
}

} // namespace

CheckReport run_check(const Manifest &m, const BlockItem &check, const RunOptions &opt) {
    const BlockValue &b = check.value;
    const BlockItem *th = b.find("theorem");
    if (!th)
        throw ParseError("check needs 'theorem'", check.line, check.column);
    const std::string &id = th->value.text;
    auto it = table().find(id);
    if (it == table().end())
        manifest_error(th->value, "unknown theorem '" + id + "'");
    for (const auto &item : b.items) {
        if (item.key == "theorem" || item.key == "domain")
            continue;
        const auto &keys = it->second.keys;
        if (std::find(keys.begin(), keys.end(), item.key) == keys.end())
            throw ParseError("unknown key '" + item.key + "' for " + id, item.line, item.column);
    }
    CheckContext ctx{m.domain, SignOptions{opt.seed, 1000}};
    if (const BlockItem *d = b.find("domain")) {
        if (d->value.kind != BlockValue::Kind::Block)
            manifest_error(d->value, "'domain' must be a block");
        ctx.domain = parse_domain(m, d->value, m.domain);
    }
    CheckInput in{m, b, ctx, id};
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    try {
        r = it->second.run ? it->second.run(in) : induced_pfaff(in);
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(e.what(), check.line, check.column);
    }
    if (opt.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RunResult run_checks(const Manifest &m, const RunOptions &opt) {
    RunResult out;
    for (const auto &c : m.checks) {
        const BlockItem *th = c.value.find("theorem");
        if (opt.only && th && th->value.text != *opt.only)
            continue;
        out.reports.push_back(run_check(m, c, opt));
    }
    out.exit_code = exit_code_for(out.reports);
    return out;
}

int exit_code_for(const std::vector<CheckReport> &reports) {
    for (const auto &r : reports)
        if (r.conclusion.type == ConclusionType::NotApplicable)
            return 2;
    return 0;
}

ProbeResult run_probe(const Manifest &m, const ProbeSpec &p) {
    const Polynomial &w = m.candidate(p.candidate);
    switch (m.kind) {
    case SystemKind::Ode:
        return probe_invariance(m.ode, w, p.start, p.horizon, p.step, p.backward);
    case SystemKind::Total:
        return probe_invariance(induced_ode(m.total, p.column), w, p.start, p.horizon, p.step, p.backward);
    case SystemKind::Partial:
        return probe_invariance(induced_ode(m.partial, p.column), w, p.start, p.horizon, p.step, p.backward);
    default:
        throw UsageError("probes need an ode, total or partial system");
    }
}

} // namespace cyclebound
