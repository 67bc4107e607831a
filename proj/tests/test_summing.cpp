#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "gdiv/constants.hpp"
#include "gdiv/summing.hpp"

using namespace gdiv;

TEST_CASE("norm coefficients, small values") {
    auto t = norm_coefficients({Family::FrakTEK, 2}, 10);
    CHECK(t.b == std::vector<std::int64_t>{0, 1, 1, 0, 2, 2, 0, 0, 2, 1, 2});
    CHECK_THROWS_AS(norm_coefficients({Family::TauEK, 2}, 10), std::domain_error);
}

TEST_CASE("norm coefficients are multiplicative") {
    auto t = norm_coefficients({Family::FrakTEKStar, 3}, 20000);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> d(1, 140);
    for (int i = 0; i < 5000; ++i) {
        std::uint64_t m = d(rng), n = d(rng);
        if (std::gcd(m, n) != 1) continue;
        CHECK(t.b[m * n] == t.b[m] * t.b[n]);
    }
}

TEST_CASE("summatory spot values") {
    CHECK(summatory({Family::FrakTEK, 2}, 10).exact_sum == 11);
    CHECK(summatory({Family::TauEKStar, 2}, 10).exact_sum == 15);
    for (Family fam : {Family::TauEK, Family::TauEKStar, Family::FrakTEK,
                       Family::FrakTEKStar})
        CHECK(summatory({fam, 2}, 1).exact_sum == 1);
}

TEST_CASE("sieve equals lattice oracle") {
    for (Family fam : {Family::FrakTEK, Family::FrakTEKStar})
        for (int k = 2; k <= 3; ++k)
            CHECK(summatory({fam, k}, 2000).exact_sum ==
                  lattice_summatory_oracle({fam, k}, 2000));
}

TEST_CASE("rational families match a direct eval loop") {
    for (Family fam : {Family::TauEK, Family::TauEKStar}) {
        FunctionFamily ff{fam, 2};
        std::int64_t direct = 0;
        for (std::uint64_t n = 1; n <= 2000; ++n) direct += eval(ff, n);
        CHECK(summatory(ff, 2000).exact_sum == direct);
    }
}

TEST_CASE("lattice class counting") {
    CHECK(lattice_class_count(100) == 79); // (Gauss circle 317 - origin) / 4
    CHECK(lattice_class_count(2) == 2);    // classes of 1 and 1+i
}

TEST_CASE("exact sums are nondecreasing in x") {
    std::int64_t prev = 0;
    for (std::uint64_t x = 1; x <= 600; ++x) {
        auto s = summatory({Family::FrakTEKStar, 2}, x).exact_sum;
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("count_tau_a") {
    // confirm the l=1 value by a direct double loop before trusting it
    std::int64_t direct = 0;
    for (std::uint64_t d0 = 1; d0 <= 10; ++d0)
        for (std::uint64_t d1 = 1; d0 * d1 * d1 <= 10; ++d1) ++direct;
    CHECK(direct == 13);
    CHECK(count_tau_a(1, 10) == 13);
    CHECK(count_tau_a(1, 1) == 1);

    // l=2 at x=4 by a direct triple loop
    std::int64_t triple = 0;
    for (std::uint64_t d0 = 1; d0 <= 4; ++d0)
        for (std::uint64_t d1 = 1; d0 * d1 * d1 <= 4; ++d1)
            for (std::uint64_t d2 = 1; d0 * d1 * d1 * d2 * d2 <= 4; ++d2) ++triple;
    CHECK(triple == 6);
    CHECK(count_tau_a(2, 4) == 6);

    // closed form: sum of floor(x / b^2)
    for (std::uint64_t x : {100ull, 12345ull, 99999ull}) {
        std::int64_t s = 0;
        for (std::uint64_t b = 1; b * b <= x; ++b) s += std::int64_t(x / (b * b));
        CHECK(count_tau_a(1, x) == s);
    }
    CHECK_THROWS_AS(count_tau_a(5, 10), std::domain_error);
}

TEST_CASE("unit-function density matches pi/4") {
    // |count - pi x / 4| <= 3 sqrt(x) at x = 1e6 (circle-problem scale)
    const double pi = 3.14159265358979323846;
    double gap = std::fabs(double(lattice_class_count(1000000)) - pi * 1e6 / 4.0);
    CHECK(gap <= 3000.0);
}

TEST_CASE("residual analysis stays bounded") {
    auto tab = residual_analysis({Family::FrakTEK, 2}, {1000, 10000, 100000});
    REQUIRE(tab.rows.size() == 3);
    for (const auto& r : tab.rows)
        CHECK(r.residual == r.exact - r.main);
    CHECK(tab.bounded);
}
