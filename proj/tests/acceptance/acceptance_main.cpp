// One line per criterion; exit status is nonzero if any criterion fails.
#include "zsum/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    zsum::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i) {
        options.only.push_back(std::atoi(argv[i]));
    }
    int failed = 0;
    zsum::run_acceptance(options, [&](const zsum::CriterionResult& r) {
        std::cout << zsum::format_result_line(r) << std::endl;
        failed += !r.passed;
    });
    std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
