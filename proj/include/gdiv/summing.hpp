#pragma once

#include <cstdint>
#include <vector>

#include "gdiv/divisors.hpp"

namespace gdiv {

// b(n) = Σ' over canonical classes of norm n of fam(α), for n <= x.
// Multiplicative in n; filled from the local splitting formulas.
struct NormCoefficientTable {
    FunctionFamily fam;
    std::uint64_t x = 0;
    std::vector<std::int64_t> b; // index 0..x, b[0] = 0
};

NormCoefficientTable norm_coefficients(FunctionFamily fam, std::uint64_t x);

// Per-n values of a rational family for n <= x (smallest-prime-factor sieve).
std::vector<std::int64_t> multiplicative_value_table(FunctionFamily fam,
                                                     std::uint64_t x);

struct SummatoryReport {
    FunctionFamily fam;
    std::uint64_t x = 0;
    std::int64_t exact_sum = 0;
    double main_term = 0;
    double residual = 0;            // exact - main
    double normalized_residual = 0; // residual / sqrt(x)
};

SummatoryReport summatory(FunctionFamily fam, std::uint64_t x);

// Independent oracle: enumerates canonical lattice classes a>=1, b>=0 with
// a²+b² <= x, factors each and sums eval(fam, ·). Gaussian families only.
std::int64_t lattice_summatory_oracle(FunctionFamily fam, std::uint64_t x,
                                      std::uint64_t bound = 1000000);

// Same enumeration with the constant function 1 (Gauss-circle class count).
std::int64_t lattice_class_count(std::uint64_t x);

// Number of tuples (d0, d1, ..., dl) with d0 * d1² * ... * dl² <= x.
std::int64_t count_tau_a(int l, std::uint64_t x);

struct ResidualRow {
    std::uint64_t x;
    std::int64_t exact;
    double main;
    double residual;
    double normalized; // residual / sqrt(x)
};

struct ResidualTable {
    std::vector<ResidualRow> rows;
    bool bounded = false; // max |normalized| <= 10 * median |normalized|
};

ResidualTable residual_analysis(FunctionFamily fam,
                                const std::vector<std::uint64_t>& xs);

} // namespace gdiv
