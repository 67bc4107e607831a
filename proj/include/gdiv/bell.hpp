#pragma once

#include <cstdint>
#include <vector>

#include "gdiv/divisors.hpp"

namespace gdiv {

// Power series with exact integer coefficients, truncated mod x^(T+1).
struct TruncatedSeries {
    std::vector<std::int64_t> c; // c[0..T]

    int truncation() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const TruncatedSeries&) const = default;
    bool is_one() const;
};

TruncatedSeries series_one(int truncation);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// (1 - x^m)^e mod x^(T+1), e any signed integer.
TruncatedSeries binomial_factor(int m, std::int64_t e, int truncation);

// Local Euler factor of the family at any prime: coefficients c_a = base(a).
TruncatedSeries bell_series(FunctionFamily fam, int truncation);

enum class ZetaBase { Zeta, HeckeZ };

// Product representation ∏ base(j s)^{e_j} times a remainder series:
// bell * ∏ (1 - x^j)^{e_j} = remainder exactly, mod x^(T+1).
struct ZetaFactorization {
    ZetaBase base = ZetaBase::Zeta;
    std::vector<std::pair<int, std::int64_t>> terms; // (shift j, exponent e_j)
    TruncatedSeries remainder;
    int remainder_order = 0; // first index with a nonzero non-constant coefficient
};

// Greedy elimination: e_j is the residual coefficient of x^j; afterwards the
// residual is 1 exactly up to the truncation.
ZetaFactorization derive_zeta_exponents(const TruncatedSeries& s,
                                        ZetaBase base = ZetaBase::Zeta);

// The published exponent vector for shifts 1..T, as polynomials in k.
// Integrality of every evaluation is asserted.
std::vector<std::int64_t> lemma_exponents(Family fam, int k, int truncation);

int default_truncation(Family fam); // 8 for FrakTEK, 5 for the starred families

struct FactorizationReport {
    FunctionFamily fam;
    int truncation = 0;
    std::vector<std::int64_t> exponents; // shifts 1..T
    TruncatedSeries residual;
    bool pass = false;
    int first_bad_coefficient = -1; // -1 when pass
    bool derived_matches = false;   // derive_zeta_exponents reproduces exponents
};

// Checks the zeta/Z factorization of the family's Dirichlet series at k:
// residual coefficients vanish through x^T and the greedy derivation
// reproduces the published exponents.
FactorizationReport verify_factorization(FunctionFamily fam, int truncation = 0);

} // namespace gdiv
