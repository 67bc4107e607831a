#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "gdiv/primes.hpp"

using namespace gdiv;

TEST_CASE("classification of rational primes") {
    CHECK(classify(2) == PrimeClass::Ramified);
    CHECK(classify(7) == PrimeClass::Inert);
    CHECK(classify(13) == PrimeClass::Split);
    CHECK_THROWS_AS(classify(12), std::domain_error);
}

TEST_CASE("split_prime") {
    CHECK(split_prime(5) == GaussInt{2, 1});
    CHECK(split_prime(13) == GaussInt{3, 2});
    CHECK_THROWS_AS(split_prime(2), std::domain_error);
    CHECK_THROWS_AS(split_prime(7), std::domain_error);
}

TEST_CASE("split pair properties up to 1e5") {
    for_primes_up_to(100000, [](std::uint64_t p) {
        if (p % 4 != 1) return;
        GaussInt pi = split_prime(p);
        GaussInt pibar{pi.im, pi.re};
        CHECK(norm(pi) == p);
        CHECK(is_gaussian_prime(pi));
        CHECK(is_gaussian_prime(pibar));
        CHECK(pi != pibar);
        // non-associated: all four associates of pi differ from pibar
        GaussInt a = pi;
        for (int t = 0; t < 4; ++t) {
            CHECK(a != pibar);
            a = mul_i(a);
        }
        // product is associated to p
        CHECK(canonical_associate(mul(pi, pibar)).first ==
              GaussInt{static_cast<std::int64_t>(p), 0});
    });
}

TEST_CASE("is_gaussian_prime") {
    CHECK(is_gaussian_prime({1, 1}));
    CHECK(is_gaussian_prime({3, 0}));
    CHECK(is_gaussian_prime({0, -7}));
    CHECK_FALSE(is_gaussian_prime({2, 0}));
    CHECK_FALSE(is_gaussian_prime({5, 0}));
    CHECK_FALSE(is_gaussian_prime({3, 1}));
    CHECK_THROWS_AS(is_gaussian_prime({0, 0}), std::domain_error);
    CHECK_THROWS_AS(is_gaussian_prime({0, 1}), std::domain_error);
}

TEST_CASE("factor_gauss examples") {
    auto f1 = factor_gauss({3, 1});
    CHECK(f1.unit == Unit::MinusI);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0] == std::pair{GaussInt{1, 1}, 1});
    CHECK(f1.factors[1] == std::pair{GaussInt{1, 2}, 1});

    auto f2 = factor_gauss({5, 0});
    CHECK(f2.unit == Unit::MinusI);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == std::pair{GaussInt{2, 1}, 1});
    CHECK(f2.factors[1] == std::pair{GaussInt{1, 2}, 1});

    auto f3 = factor_gauss({1, 1});
    CHECK(f3.unit == Unit::One);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0] == std::pair{GaussInt{1, 1}, 1});

    CHECK_THROWS_AS(factor_gauss({0, 0}), std::domain_error);
}

TEST_CASE("factorization round trip, random sample") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    int done = 0;
    while (done < 100000) {
        GaussInt z{d(rng), d(rng)};
        if (z.is_zero() || norm(z) > 1000000) continue;
        auto gf = factor_gauss(z);
        REQUIRE(gf.value() == z);
        std::uint64_t n = 1;
        for (const auto& [p, a] : gf.factors) {
            CHECK(is_canonical(p));
            CHECK(is_gaussian_prime(p));
            for (int i = 0; i < a; ++i) n *= norm(p);
        }
        CHECK(n == norm(z));
        ++done;
    }
}

TEST_CASE("gaussian_primes_up_to") {
    CHECK(gaussian_primes_up_to(1).empty());
    CHECK(gaussian_primes_up_to(5) ==
          std::vector<GaussInt>{{1, 1}, {2, 1}, {1, 2}});
    CHECK(gaussian_primes_up_to(9) ==
          std::vector<GaussInt>{{1, 1}, {2, 1}, {1, 2}, {3, 0}});

    auto primes = gaussian_primes_up_to(20000);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (GaussInt p : primes) {
        CHECK(is_canonical(p));
        CHECK(is_gaussian_prime(p));
        CHECK(norm(p) <= 20000);
        CHECK(seen.insert({p.re, p.im}).second); // no duplicates or associates
    }
}

TEST_CASE("prime count matches the Landau band at 1e6") {
    auto primes = gaussian_primes_up_to(1000000);
    double ratio = static_cast<double>(primes.size()) /
                   (1e6 / std::log(1e6));
    CHECK(ratio >= 1.00);
    CHECK(ratio <= 1.15);
}

TEST_CASE("factor_rational") {
    auto f = factor_rational(12);
    CHECK(f.factors == std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
    CHECK(factor_rational(1).factors.empty());
    auto g = factor_rational(9999999967ull);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == std::pair<std::uint64_t, int>{9999999967ull, 1});
    CHECK(is_prime(9999999967ull));

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> d(1, 1000000000000ull);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = d(rng);
        auto rf = factor_rational(n);
        CHECK(rf.value() == n);
        for (auto [p, a] : rf.factors) CHECK(is_prime(p));
    }
}
