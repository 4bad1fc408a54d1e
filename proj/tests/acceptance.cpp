// Runs the acceptance suite and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "valwb/selftest.hpp"

int main() {
    valwb::WorkbenchConfig cfg;
    cfg.precision = valwb::WorkbenchConfig::default_precision();
    valwb::Report r = valwb::run_selftest(cfg);
    int failed = 0;
    for (const auto& v : r.verdicts) {
        std::printf("%s %s: %s\n", v.passed ? "PASS" : "FAIL", v.operation.c_str(), v.outcome.c_str());
        if (!v.passed) {
            ++failed;
            for (const auto& c : v.caveats) std::printf("     %s\n", c.c_str());
        }
    }
    std::printf("%zu criteria, %d failed\n", r.verdicts.size(), failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
