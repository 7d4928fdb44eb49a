#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tubecat {

/// Outcome of one verified identity over a family of cases.
struct CheckResult {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::size_t cases = 0;
    bool passed = true;
    std::optional<std::string> counterexample;
};

}  // namespace tubecat
