// report.hpp: verification records and their serializations.
//
// JSON output is deterministic: fixed key order, records in insertion order,
// and no wall-clock fields (timings appear only in the text rendering so that
// reruns with the same seed are byte-identical).
#ifndef NULLKIT_REPORT_HPP
#define NULLKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nullkit {

enum class Verdict { Pass, Fail, Skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

struct CheckRecord {
    std::string instance;
    std::string check;
    std::string statement; // tag of the statement being checked, e.g. "thm-ii"
    Verdict verdict = Verdict::Skipped;
    bool expected = false; // a fail/exceed that is itself the asserted behavior
    std::string witness;   // concrete monomial/term for failures
    std::string note;
    double ms = 0.0;

    // Expected failures are regressions we assert, so they count as passing.
    bool counts_as_pass() const {
        return verdict == Verdict::Pass || verdict == Verdict::Skipped ||
               (verdict == Verdict::Fail && expected);
    }
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;
    bool resource_aborted = false;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    int count(Verdict v, bool expected_only = false) const {
        int n = 0;
        for (const auto& r : records)
            if (r.verdict == v && (!expected_only || r.expected)) ++n;
        return n;
    }
    bool all_pass() const {
        for (const auto& r : records)
            if (!r.counts_as_pass()) return false;
        return true;
    }

    std::string to_json() const;
    std::string to_text() const;
};

std::string emit_report(const Report& r, const std::string& format);

extern const char* const kVersion;

} // namespace nullkit

#endif
