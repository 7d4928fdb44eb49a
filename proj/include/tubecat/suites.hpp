#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tubecat/check.hpp"
#include "tubecat/lin_rep.hpp"

namespace tubecat {

struct SuiteOptions {
    int alphabet = 2;
    int depth = 2;
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t bound = default_dimension_bound();
};

/// Seeded property checks per module. Case i draws from its own generator
/// seeded by (seed, i), so results do not depend on the thread count.
std::vector<CheckResult> run_nc_suite(const SuiteOptions& opts);
std::vector<CheckResult> run_tube_suite(const SuiteOptions& opts);
std::vector<CheckResult> run_linrep_suite(const SuiteOptions& opts);
std::vector<CheckResult> run_wreath_suite(const SuiteOptions& opts);

/// `nc`, `tube`, `linrep`, `wreath` or `all`; throws Error(Parse) otherwise.
std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace tubecat
