// suites.hpp: named verification suites over fixed and seeded corpora.
#ifndef NULLKIT_SUITES_HPP
#define NULLKIT_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nullkit/errors.hpp"
#include "nullkit/report.hpp"

namespace nullkit {

struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 42;
    int count = 0; // 0 = suite default
    Budgets budgets;
    std::vector<std::string> files; // overrides the generated corpus when given
};

std::vector<std::string> suite_names();
Report run_suite(const SuiteConfig& config);

} // namespace nullkit

#endif
