#pragma once

#include <cstdint>

#include "gdiv/divisors.hpp"

namespace gdiv {

// Which Euler-product constant: the Gaussian mean values C_k (base tau_k)
// and C_{k*} (base frak_t_k), or the rational analog A_k (base frak_t_k).
enum class WhichConstant { C, CStar, A };

struct EulerProductResult {
    double value = 0;
    std::uint64_t prime_cutoff = 0;
    int series_truncation = 0;
    double tail_estimate = 0;
};

// Aggregated contribution of all Gaussian prime classes above p:
// g(2) for p = 2, g(p)² for split p, g(p²) for inert p, where
// g(y) = 1 + Σ_{a=2..A} (base(a) - base(a-1)) / y^a. For WhichConstant::A
// the rational local factor g(p) is returned instead.
double local_factor(WhichConstant which, int k, std::uint64_t p, int truncation);

// C_k / C_{k*}: (π/4) · ∏_{p <= cutoff} local_factor; A_k: plain product.
// Throws when the tail estimate exceeds 1e-6.
EulerProductResult compute_constant(WhichConstant which, int k,
                                    std::uint64_t prime_cutoff = 1000000,
                                    int truncation = 64);

// Main-term constant of the summatory function of a family (memoized).
double main_term_constant(FunctionFamily fam);

// Euler-Maclaurin zeta on the real axis; supports s = 1/2 and s > 1.
double zeta_real(double s);

} // namespace gdiv
