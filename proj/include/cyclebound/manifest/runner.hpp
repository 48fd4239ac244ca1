#pragma once

#include "cyclebound/manifest/manifest.hpp"
#include "cyclebound/manifest/probe.hpp"
#include "cyclebound/theorems.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cyclebound {

struct RunOptions {
    std::uint64_t seed = 42;
    std::optional<std::string> only; // theorem id filter
    bool timing = false;             // timing_ms stays 0 otherwise, keeping output byte-stable
};

struct RunResult {
    std::vector<CheckReport> reports;
    int exit_code = 0;
};

/// One check block; errors propagate (exit code 1 at the CLI).
CheckReport run_check(const Manifest &m, const BlockItem &check, const RunOptions &opt);

/// All check blocks in manifest order.
RunResult run_checks(const Manifest &m, const RunOptions &opt);

/// 0 when every conclusion is Bound/Absence/Classification, 2 otherwise.
int exit_code_for(const std::vector<CheckReport> &reports);

/// Probe block against the manifest's ODE or the selected induced column.
ProbeResult run_probe(const Manifest &m, const ProbeSpec &p);

} // namespace cyclebound
