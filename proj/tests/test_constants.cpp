#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gdiv/constants.hpp"

using namespace gdiv;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("zeta on the real axis") {
    CHECK(zeta_real(2.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-12));
    CHECK(zeta_real(4.0) ==
          doctest::Approx(kPi * kPi * kPi * kPi / 90).epsilon(1e-12));
    CHECK(zeta_real(0.5) == doctest::Approx(-1.4603545088095868).epsilon(1e-10));
    CHECK(zeta_real(3.0) == doctest::Approx(1.2020569031595943).epsilon(1e-10));
    CHECK_THROWS_AS(zeta_real(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta_real(0.3), std::domain_error);
}

TEST_CASE("published values of C_2 and C_2*") {
    auto c2 = compute_constant(WhichConstant::C, 2, 100000, 64);
    CHECK(c2.value == doctest::Approx(1.156101).epsilon(5e-5));
    // the starred base changes by 2 per step, so the tail gate needs a
    // slightly larger cutoff than the plain constant does
    auto c2s = compute_constant(WhichConstant::CStar, 2, 200000, 64);
    CHECK(c2s.value == doctest::Approx(1.524172).epsilon(5e-5));
    CHECK(c2.tail_estimate > 0);
    CHECK(c2.prime_cutoff == 100000);
}

TEST_CASE("degenerate base gives unit local factors") {
    // k = 1: tau_1 is identically 1, so every telescoping difference vanishes
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 101ull})
        CHECK(local_factor(WhichConstant::C, 1, p, 32) == 1.0);
}

TEST_CASE("local factor structure") {
    // split p: the factor is a perfect square of the one-prime factor g(p)
    double g5 = local_factor(WhichConstant::A, 2, 5, 64);
    CHECK(local_factor(WhichConstant::CStar, 2, 5, 64) ==
          doctest::Approx(g5 * g5).epsilon(1e-15));
    // inert p: depends on p^2 only
    double f3 = local_factor(WhichConstant::C, 2, 3, 64);
    CHECK(f3 == doctest::Approx(1.0 + 1.0 / 81 + 1.0 / 6561).epsilon(1e-4));
    CHECK_THROWS_AS(local_factor(WhichConstant::C, 2, 4, 64), std::domain_error);
}

TEST_CASE("monotone stabilization and self-consistency") {
    auto a5 = compute_constant(WhichConstant::A, 2, 200000, 64);
    auto a6 = compute_constant(WhichConstant::A, 2, 1000000, 64);
    CHECK(std::fabs(a6.value - a5.value) <= 10 * a5.tail_estimate);

    auto c5 = compute_constant(WhichConstant::C, 2, 100000, 64);
    auto c6 = compute_constant(WhichConstant::C, 2, 1000000, 64);
    CHECK(std::fabs(c6.value - c5.value) <= 10 * c5.tail_estimate);
}

TEST_CASE("nonconvergent configurations are rejected") {
    CHECK_THROWS_AS(compute_constant(WhichConstant::C, 2, 100, 64),
                    std::domain_error);
    CHECK_THROWS_AS(compute_constant(WhichConstant::C, 1, 100000, 64),
                    std::domain_error);
    CHECK_THROWS_AS(compute_constant(WhichConstant::C, 2, 50, 64),
                    std::domain_error);
}
