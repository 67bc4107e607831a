// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <iostream>

#include "gdiv/verify.hpp"

int main() {
    return gdiv::verify::print_and_check(std::cout, std::cerr) ? 0 : 2;
}
