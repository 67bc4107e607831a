#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gdiv/champions.hpp"
#include "gdiv/divisors.hpp"

using namespace gdiv;

TEST_CASE("prime counting report") {
    auto tiny = prime_counting_report(2);
    CHECK(tiny.count == 1); // only the class of 1+i
    auto r = prime_counting_report(1000000);
    CHECK(r.count_ratio >= 1.00);
    CHECK(r.count_ratio <= 1.15);
    CHECK(r.logsum_ratio > 0.9);
    CHECK(r.logsum_ratio < 1.1);
}

TEST_CASE("champion scan, rational family") {
    auto records = champion_scan({Family::TauEKStar, 2}, 5000);
    REQUIRE(!records.empty());
    double prev = 0;
    std::uint64_t prev_n = 0;
    for (const auto& r : records) {
        CHECK(r.ratio > prev);
        CHECK(r.n_or_norm > prev_n);
        prev = r.ratio;
        prev_n = r.n_or_norm;
    }
    // the ratio vanishes on squarefree arguments, so champions are powerful
    CHECK(records.front().n_or_norm >= 16);
    CHECK_THROWS_AS(champion_scan({Family::TauEKStar, 2}, 8), std::domain_error);
}

TEST_CASE("champion scan, Gaussian family") {
    auto records = champion_scan({Family::FrakTEK, 2}, 20000);
    REQUIRE(!records.empty());
    double final_max = records.back().ratio;
    CHECK(final_max > 0.0);
    // crude sanity bound from tau_k(n) <= k^Omega(n) <= k^log2(n):
    // ratio <= (log k / log 2) * llog x_max
    double crude = std::log(2.0) / std::log(2.0) *
                   std::log(std::log(20000.0));
    CHECK(final_max <= crude);
    // champions appear in order and strictly improve
    double prev = 0;
    for (const auto& r : records) {
        CHECK(r.ratio > prev);
        prev = r.ratio;
    }
}

TEST_CASE("powers of two subfamily, closed form") {
    // for n = 2^a the ratio is log tau_k(a) llog(2^a) / (a log 2)
    FunctionFamily ff{Family::TauEK, 2};
    double best = 0;
    for (int a = 5; a <= 16; ++a) {
        double n = std::pow(2.0, a);
        double ratio = std::log(double(tau_k(2, a))) * std::log(a * std::log(2.0)) /
                       (a * std::log(2.0));
        best = std::max(best, ratio);
        (void)n;
    }
    auto records = champion_scan(ff, 1 << 16);
    CHECK(records.back().ratio >= best - 1e-12);
}

TEST_CASE("extremal construction") {
    FunctionFamily ff{Family::FrakTEK, 2};
    CHECK(extremal_construction(ff, 1, 10000) == 0.0); // tau_k(1) = 1
    double r3 = extremal_construction(ff, 2, 1000);
    double r4 = extremal_construction(ff, 2, 10000);
    double r5 = extremal_construction(ff, 2, 100000);
    double target = std::log(2.0) / 2.0;
    CHECK(r3 >= r4);
    CHECK(r4 >= r5);
    CHECK(r5 >= target);
    CHECK(r5 <= 1.3 * target);
    // l = 2 dominates nearby l for the unstarred Gaussian family
    for (int l : {1, 3, 4, 5})
        CHECK(extremal_construction(ff, 2, 10000) >=
              extremal_construction(ff, l, 10000));
    CHECK_THROWS_AS(extremal_construction(ff, 0, 10000), std::domain_error);
    CHECK_THROWS_AS(extremal_construction(ff, 2, 50), std::domain_error);
}
