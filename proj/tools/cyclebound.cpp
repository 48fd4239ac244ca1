#include "cyclebound/manifest/report_json.hpp"
#include "cyclebound/manifest/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace cyclebound;

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag)
        return *flag;
    if (const char *env = std::getenv("CYCLEBOUND_SEED")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception &) {
        }
        throw UsageError(std::string("CYCLEBOUND_SEED is not an unsigned integer: ") + env);
    }
    return 42;
}

int cmd_check(const std::string &file, const std::string &json_out, const std::optional<std::uint64_t> &seed_flag,
              const std::string &only, bool verbose, bool timing) {
    RunOptions opt;
    opt.seed = resolve_seed(seed_flag);
    if (!only.empty())
        opt.only = only;
    opt.timing = timing;
    Manifest m = load_manifest_file(file);
    RunResult res = run_checks(m, opt);
    if (opt.only && res.reports.empty())
        throw UsageError("no check for theorem " + only);
    // stdout carries either the text report or the JSON document, never both
    if (json_out != "-")
        for (const auto &r : res.reports)
            std::cout << render_text(r, verbose);
    if (!json_out.empty()) {
        std::string doc = reports_to_json(res.reports, opt.seed);
        if (json_out == "-") {
            std::cout << doc;
        } else {
            std::ofstream os(json_out, std::ios::binary);
            if (!os)
                throw Error("cannot write " + json_out);
            os << doc;
        }
    }
    return res.exit_code;
}

int cmd_eval(const std::string &file, const std::string &expr) {
    Manifest m = load_manifest_file(file);
    KForm v = parse_form(expr, m.ctx);
    std::cout << v.to_string() << "\n";
    return 0;
}

int cmd_probe(const std::string &file, const std::string &candidate) {
    Manifest m = load_manifest_file(file);
    m.candidate(candidate);
    int ran = 0;
    for (const auto &p : m.probes) {
        if (p.candidate != candidate)
            continue;
        ProbeResult r = run_probe(m, p);
        std::cout << candidate << " from (";
        for (std::size_t i = 0; i < r.start.size(); ++i)
            std::cout << (i ? ", " : "") << format_double(r.start[i]);
        std::cout << ") T=" << format_double(p.horizon) << " h=" << format_double(p.step)
                  << (p.backward ? " backward" : "") << ": max|w| = " << format_double(r.max_abs_w)
                  << ", steps = " << r.steps << (r.diverged ? ", diverged" : "") << "\n";
        ++ran;
    }
    if (ran == 0)
        throw UsageError("no probe block for candidate " + candidate);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Checks boundedness and absence tests for compact integral manifolds"};
    app.require_subcommand(1);

    std::string file, json_out, only, expr, candidate;
    std::optional<std::uint64_t> seed;
    bool verbose = false, timing = false;

    auto *check = app.add_subcommand("check", "run every check block of a manifest");
    check->add_option("file", file)->required();
    check->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
    check->add_option("--seed", seed, "sampling seed (default $CYCLEBOUND_SEED or 42)");
    check->add_option("--only", only, "run only checks of this theorem id");
    check->add_flag("--verbose", verbose, "echo checker inputs");
    check->add_flag("--timing", timing, "record wall time per check");

    auto *eval = app.add_subcommand("eval", "evaluate an expression over the manifest's variables");
    eval->add_option("file", file)->required();
    eval->add_option("--expr", expr)->required();

    auto *probe = app.add_subcommand("probe", "integrate the probe blocks of one candidate");
    probe->add_option("file", file)->required();
    probe->add_option("--candidate", candidate)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*check)
            return cmd_check(file, json_out, seed, only, verbose, timing);
        if (*eval)
            return cmd_eval(file, expr);
        return cmd_probe(file, candidate);
    } catch (const ParseError &e) {
        std::cerr << file << ":" << e.what() << "\n";
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
