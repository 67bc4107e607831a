#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdiv/divisors.hpp"

namespace gdiv {

// One running-maximum record of the ratio log f(α) · llog N / log N.
struct ChampionRecord {
    std::string argument;
    std::uint64_t n_or_norm = 0;
    double ratio = 0;
    bool running_max = true;
};

// Scans arguments with n (or norm) in [16, x_max] and emits every new
// running maximum of the maximal-order ratio.
std::vector<ChampionRecord> champion_scan(FunctionFamily fam, std::uint64_t x_max);

// Ratio of the extremal product α = ∏' p^l over prime classes of norm <= X,
// computed from prime tallies without materializing α:
// r · log f(l) · llog N(α) / log N(α), log N(α) = l · Σ' log N(p).
double extremal_construction(FunctionFamily fam, int l, std::uint64_t X);

struct PrimeCountReport {
    std::uint64_t x = 0;
    std::int64_t count = 0;   // prime classes with norm <= x
    double logsum = 0;        // Σ' log N(p)
    double count_ratio = 0;   // count / (x / ln x)
    double logsum_ratio = 0;  // logsum / x
};

PrimeCountReport prime_counting_report(std::uint64_t x);

} // namespace gdiv
