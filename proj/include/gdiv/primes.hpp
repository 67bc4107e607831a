#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gdiv/gaussint.hpp"

namespace gdiv {

// Splitting behavior of a rational prime in Z[i].
enum class PrimeClass { Ramified, Split, Inert };

bool is_prime(std::uint64_t n);

// Requires p prime: Ramified iff p = 2, Split iff p ≡ 1 (mod 4),
// Inert iff p ≡ 3 (mod 4).
PrimeClass classify(std::uint64_t p);

// For split p returns the canonical prime a+bi with a > b > 0, a²+b² = p.
// The second class above p is b+ai.
GaussInt split_prime(std::uint64_t p);

bool is_gaussian_prime(GaussInt z);

struct RationalFactorization {
    std::vector<std::pair<std::uint64_t, int>> factors; // p strictly increasing

    std::uint64_t value() const;
};

RationalFactorization factor_rational(std::uint64_t n);

struct GaussFactorization {
    Unit unit = Unit::One;
    std::vector<std::pair<GaussInt, int>> factors; // canonical, sorted by (norm, im)

    GaussInt value() const;
};

// Canonical factorization over Z[i]: factor the norm, then peel 1+i,
// inert primes and split primes as divisibility dictates.
GaussFactorization factor_gauss(GaussInt z);

// One canonical representative per prime class with norm <= x,
// sorted by (norm, im).
std::vector<GaussInt> gaussian_primes_up_to(std::uint64_t x);

// Segmented Eratosthenes; calls fn(p) for each prime p <= n in order.
void for_primes_up_to(std::uint64_t n, const std::function<void(std::uint64_t)>& fn);
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// Smallest-prime-factor table; drives the bulk multiplicative sieves.
struct SpfTable {
    std::vector<std::uint32_t> spf; // spf[n] = least prime factor, spf[1] = 1

    explicit SpfTable(std::uint32_t n);
    std::uint32_t operator[](std::uint32_t n) const { return spf[n]; }
    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf.size() - 1); }
};

} // namespace gdiv
