#include "cyclebound/manifest/report_json.hpp"

#include <json.hpp>

#include <sstream>

namespace cyclebound {

std::string reports_to_json(const std::vector<CheckReport> &reports, std::uint64_t seed) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["tool"] = tool_name;
    doc["version"] = tool_version;
    doc["seed"] = seed;
    doc["reports"] = ordered_json::array();
    for (const auto &r : reports) {
        ordered_json jr;
        jr["theorem_id"] = r.theorem_id;
        jr["object_kind"] = r.object_kind;
        jr["hypotheses"] = ordered_json::array();
        for (const auto &h : r.hypotheses)
            jr["hypotheses"].push_back({{"desc", h.desc}, {"verdict", to_string(h.verdict)}, {"witness", h.witness}});
        ordered_json c;
        c["type"] = to_string(r.conclusion.type);
        if (r.conclusion.bound)
            c["bound"] = *r.conclusion.bound;
        c["text"] = r.conclusion.text;
        jr["conclusion"] = std::move(c);
        jr["timing_ms"] = r.timing_ms;
        doc["reports"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const CheckReport &r, bool verbose) {
    std::ostringstream os;
    os << r.theorem_id << " (" << r.object_kind << ")\n";
    if (verbose)
        for (const auto &[k, v] : r.inputs_echo)
            os << "  " << k << " = " << v << "\n";
    for (const auto &h : r.hypotheses) {
        os << "  [" << to_string(h.verdict) << "] " << h.desc;
        if (!h.witness.empty())
            os << "\n      " << h.witness;
        os << "\n";
    }
    os << "  => " << to_string(r.conclusion.type);
    if (r.conclusion.bound)
        os << " " << *r.conclusion.bound;
    os << ": " << r.conclusion.text << "\n";
    if (r.timing_ms > 0)
        os << "  (" << r.timing_ms << " ms)\n";
    return os.str();
}

} // namespace cyclebound
