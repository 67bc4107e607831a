#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gdiv::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;      // deterministic numeric summary
    double elapsed_s = 0;
};

std::vector<CriterionResult> run_all();

// Prints one PASS/FAIL line per criterion to `out` (deterministic) and the
// timings to `err`. Returns true iff everything passed.
bool print_and_check(std::ostream& out, std::ostream& err);

} // namespace gdiv::verify
