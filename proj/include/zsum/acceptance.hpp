#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zsum {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::vector<int> only;          ///< empty runs all ten
    std::uint64_t seed = 20240601;  ///< property-suite RNG seed
    int property_cases = 1000;
};

/// Runs the acceptance criteria in order. on_result fires after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  davenport constants  (0.01s)  <detail>"
std::string format_result_line(const CriterionResult& r);

} // namespace zsum
