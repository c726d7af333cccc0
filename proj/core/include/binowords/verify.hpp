#pragma once

#include <binowords/complexity.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace binowords {

/// quick keeps every suite to seconds; full uses the acceptance bounds.
enum class Scale { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; ///< instance count, or the first counterexample on failure
};

struct SuiteReport {
    std::string name;
    Scale scale = Scale::quick;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const;
    std::string text() const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// Every registered property/oracle suite, in a fixed order.
const std::vector<SuiteInfo>& suites();
bool has_suite(std::string_view name);
/// Runs one suite. Exceptions thrown inside a suite are reported as a failed check.
SuiteReport run_suite(std::string_view name, Scale scale, EngineOptions options = {});

} // namespace binowords
