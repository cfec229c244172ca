#include "nullkit/report.hpp"

#include <json.hpp>

#include <sstream>

#include "nullkit/errors.hpp"

namespace nullkit {

const char* const kVersion = "0.1.0";

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["version"] = kVersion;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["instance"] = r.instance;
        rec["check"] = r.check;
        rec["statement"] = r.statement;
        rec["verdict"] = verdict_name(r.verdict);
        rec["expected"] = r.expected;
        if (!r.witness.empty()) rec["witness"] = r.witness;
        if (!r.note.empty()) rec["note"] = r.note;
        j["records"].push_back(std::move(rec));
    }
    nlohmann::ordered_json summary;
    summary["pass"] = count(Verdict::Pass);
    summary["fail"] = count(Verdict::Fail);
    summary["expected_fail"] = count(Verdict::Fail, /*expected_only=*/true);
    summary["skipped"] = count(Verdict::Skipped);
    summary["ok"] = all_pass();
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << " (seed " << seed << ", version " << kVersion << ")\n";
    for (const auto& r : records) {
        std::string v = verdict_name(r.verdict);
        if (r.verdict == Verdict::Fail && r.expected) v = "fail(expected)";
        out << "  [" << v << "] " << r.instance << " :: " << r.check << " [" << r.statement
            << "]";
        if (!r.witness.empty()) out << " witness=" << r.witness;
        if (!r.note.empty()) out << " (" << r.note << ")";
        if (r.ms > 0) out << " " << r.ms << " ms";
        out << "\n";
    }
    out << "summary: pass=" << count(Verdict::Pass) << " fail=" << count(Verdict::Fail)
        << " (expected " << count(Verdict::Fail, true) << ") skipped=" << count(Verdict::Skipped)
        << " => " << (all_pass() ? "OK" : "FAIL") << "\n";
    return out.str();
}

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return r.to_json();
    if (format == "text") return r.to_text();
    throw error("unknown report format: " + format);
}

} // namespace nullkit
