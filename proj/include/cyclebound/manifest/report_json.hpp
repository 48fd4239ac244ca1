#pragma once

#include "cyclebound/theorems/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclebound {

inline constexpr const char *tool_name = "cyclebound";
inline constexpr const char *tool_version = "0.1.0";

/// Schema-conforming document, keys in a fixed order, two-space indent, trailing newline.
std::string reports_to_json(const std::vector<CheckReport> &reports, std::uint64_t seed);

/// Human-readable report; verbose adds the echoed inputs.
std::string render_text(const CheckReport &r, bool verbose);

} // namespace cyclebound
