#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gdiv/bell.hpp"

using namespace gdiv;

TEST_CASE("series_mul") {
    TruncatedSeries onepx{{1, 1, 0, 0}};
    TruncatedSeries onemx{{1, -1, 0, 0}};
    CHECK(series_mul(onepx, onemx) == TruncatedSeries{{1, 0, -1, 0}});
    CHECK(series_mul(series_one(3), onepx) == onepx);
    // telescoping: geometric series times (1 - x)
    CHECK(series_mul(binomial_factor(1, -1, 6), binomial_factor(1, 1, 6)) ==
          series_one(6));
    CHECK_THROWS_AS(series_mul(series_one(3), series_one(4)), std::invalid_argument);
}

TEST_CASE("binomial_factor") {
    CHECK(binomial_factor(1, -1, 4) == TruncatedSeries{{1, 1, 1, 1, 1}});
    CHECK(binomial_factor(2, 2, 4) == TruncatedSeries{{1, 0, -2, 0, 1}});
    CHECK(binomial_factor(5, -1, 9) ==
          TruncatedSeries{{1, 0, 0, 0, 0, 1, 0, 0, 0, 0}});
    CHECK_THROWS_AS(binomial_factor(0, 1, 4), std::domain_error);
}

TEST_CASE("binomial_factor inverse property") {
    for (int m = 1; m <= 4; ++m)
        for (int e = -5; e <= 5; ++e)
            CHECK(series_mul(binomial_factor(m, e, 12),
                             binomial_factor(m, -e, 12)) == series_one(12));
}

TEST_CASE("bell_series coefficients") {
    CHECK(bell_series({Family::FrakTEK, 2}, 8) ==
          TruncatedSeries{{1, 1, 2, 2, 3, 2, 4, 2, 4}});
    CHECK(bell_series({Family::FrakTEKStar, 2}, 6) ==
          TruncatedSeries{{1, 1, 3, 2, 5, 4, 6}});
    for (Family fam : {Family::TauEK, Family::TauEKStar, Family::FrakTEK,
                       Family::FrakTEKStar}) {
        auto s = bell_series({fam, 4}, 1);
        CHECK(s == TruncatedSeries{{1, 1}});
    }
}

TEST_CASE("derive_zeta_exponents at the published k=2 vectors") {
    auto zf = derive_zeta_exponents(TruncatedSeries{{1, 1, 2, 2, 3, 2, 4, 2, 4}},
                                    ZetaBase::HeckeZ);
    std::vector<std::int64_t> got;
    for (auto [j, e] : zf.terms) got.push_back(e);
    CHECK(got == std::vector<std::int64_t>{1, 1, 0, 0, -1, 1, -1, 0});
    CHECK(zf.remainder.is_one());
    CHECK(zf.remainder_order == 9);

    auto zf2 = derive_zeta_exponents(TruncatedSeries{{1, 1, 3, 2, 5, 4}});
    std::vector<std::int64_t> got2;
    for (auto [j, e] : zf2.terms) got2.push_back(e);
    CHECK(got2 == std::vector<std::int64_t>{1, 2, -1, 0, 1});

    auto trivial = derive_zeta_exponents(series_one(5));
    for (auto [j, e] : trivial.terms) CHECK(e == 0);
    CHECK(trivial.remainder.is_one());

    CHECK_THROWS_AS(derive_zeta_exponents(TruncatedSeries{{2, 1}}),
                    std::domain_error);
}

TEST_CASE("derive then recompose is the identity") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        TruncatedSeries s;
        s.c.assign(9, 0);
        s.c[0] = 1;
        for (int i = 1; i <= 8; ++i) s.c[i] = d(rng);
        auto zf = derive_zeta_exponents(s);
        TruncatedSeries back = series_one(8);
        for (auto [j, e] : zf.terms)
            if (e != 0) back = series_mul(back, binomial_factor(j, -e, 8));
        CHECK(back == s);
    }
}

TEST_CASE("factorization identities hold for k = 2..8") {
    for (Family fam : {Family::TauEKStar, Family::FrakTEK, Family::FrakTEKStar}) {
        for (int k = 2; k <= 8; ++k) {
            auto rep = verify_factorization({fam, k});
            CHECK(rep.pass);
            CHECK(rep.derived_matches);
            CHECK(rep.residual.c[0] == 1);
        }
    }
    CHECK_THROWS_AS(verify_factorization({Family::TauEK, 2}), std::domain_error);
}

TEST_CASE("published exponent polynomials at small k") {
    // Gaussian unstarred family, shift-2 exponent is k-1
    CHECK(lemma_exponents(Family::FrakTEK, 3, 8)[1] == 2);
    // starred families at k=3: shifts 2..5
    auto e = lemma_exponents(Family::TauEKStar, 3, 5);
    CHECK(e[1] == 5);
    CHECK(e[2] == -3);
    CHECK(e[3] == -3);
    CHECK(e[4] == 9);
}
