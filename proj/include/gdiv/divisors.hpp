#pragma once

#include <cstdint>
#include <string>

#include "gdiv/gaussint.hpp"

namespace gdiv {

// The four exponential divisor families. The starred families apply the
// Gaussian tuple count to prime exponents, the unstarred the rational one;
// the Frak families live on Z[i], the Tau families on Z.
enum class Family { TauEK, TauEKStar, FrakTEK, FrakTEKStar };

struct FunctionFamily {
    Family family;
    int k; // k >= 2

    bool operator==(const FunctionFamily&) const = default;
};

bool gaussian_domain(Family f);
std::string family_name(Family f);
Family parse_family(std::string_view name);

// tau_k(n): ordered k-tuples of positive integers with product n.
// Multiplicative with tau_k(p^a) = C(k+a-1, a).
std::int64_t tau_k(int k, std::uint64_t n);

// frak_t_k over a rational integer argument: ramified prime doubles the
// exponent, split squares the binomial, inert keeps it.
std::int64_t frak_t_k(int k, std::uint64_t n);

// frak_t_k over a Gaussian argument via its canonical factorization.
std::int64_t frak_t_k(int k, GaussInt alpha);

// Value of the exponent-level base function (tau_k or frak_t_k) for a family.
std::int64_t exponent_base(Family fam, int k, std::uint64_t a);

std::int64_t eval(FunctionFamily fam, std::uint64_t n);
std::int64_t eval(FunctionFamily fam, GaussInt alpha);

// Independent oracles: direct tuple enumeration from the definitions.
std::int64_t brute_force_tau_k(int k, std::uint64_t n);
std::int64_t brute_force_frak_t_k(int k, GaussInt alpha,
                                  std::uint64_t norm_bound = 10000);

enum class BaseFunction { TauK, FrakTK };

struct MaxLogRatio {
    std::uint64_t argmax;
    double value; // max of log f(n) / n
};

// Scans n = 1..n_max for the maximum of log f(n)/n. The maximum sits at
// n = 2 with value log k / 2 (tau_k) resp. log C(k+1,2) / 2 (frak_t_k).
MaxLogRatio max_log_ratio(BaseFunction base, int k, std::uint64_t n_max);

} // namespace gdiv
