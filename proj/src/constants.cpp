#include "gdiv/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gdiv/parallel.hpp"
#include "gdiv/primes.hpp"

namespace gdiv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kPrimeChunk = 4096;

std::int64_t base_at(WhichConstant which, int k, int a) {
    return which == WhichConstant::C ? tau_k(k, static_cast<std::uint64_t>(a))
                                     : frak_t_k(k, static_cast<std::uint64_t>(a));
}

std::vector<std::int64_t> base_diffs(WhichConstant which, int k, int truncation) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(truncation) + 1, 0);
    std::int64_t prev = base_at(which, k, 1);
    for (int a = 2; a <= truncation; ++a) {
        std::int64_t cur = base_at(which, k, a);
        d[static_cast<std::size_t>(a)] = cur - prev;
        prev = cur;
    }
    return d;
}

// g(y) = 1 + Σ_{a>=2} (base(a) - base(a-1)) / y^a
double g_of(const std::vector<std::int64_t>& diffs, double y) {
    long double sum = 1.0L;
    long double inv = 1.0L / y;
    long double ypow = inv * inv; // y^{-2}
    for (std::size_t a = 2; a < diffs.size(); ++a) {
        if (diffs[a] != 0) sum += static_cast<long double>(diffs[a]) * ypow;
        ypow *= inv;
        if (ypow < 1e-22L) break;
    }
    return static_cast<double>(sum);
}

double local_from_diffs(WhichConstant which, const std::vector<std::int64_t>& diffs,
                        std::uint64_t p) {
    if (which == WhichConstant::A) return g_of(diffs, static_cast<double>(p));
    if (p == 2) return g_of(diffs, 2.0);
    if (p % 4 == 1) {
        double g = g_of(diffs, static_cast<double>(p));
        return g * g;
    }
    return g_of(diffs, static_cast<double>(p) * static_cast<double>(p));
}

} // namespace

double local_factor(WhichConstant which, int k, std::uint64_t p, int truncation) {
    if (!is_prime(p)) throw std::domain_error("local_factor: p is not prime");
    if (truncation < 2) throw std::domain_error("local_factor: truncation must be >= 2");
    return local_from_diffs(which, base_diffs(which, k, truncation), p);
}

EulerProductResult compute_constant(WhichConstant which, int k,
                                    std::uint64_t prime_cutoff, int truncation) {
    if (k < 2) throw std::domain_error("compute_constant: k must be >= 2");
    if (prime_cutoff < 100)
        throw std::domain_error("compute_constant: cutoff must be >= 100");
    auto diffs = base_diffs(which, k, truncation);

    double c = std::fabs(static_cast<double>(diffs[2])); // |base(2) - base(1)|
    double tail = c / (static_cast<double>(prime_cutoff) *
                       std::log(static_cast<double>(prime_cutoff)));
    if (tail > 1e-6)
        throw std::domain_error("compute_constant: nonconvergent configuration, "
                                "tail estimate exceeds 1e-6");

    auto primes = primes_up_to(prime_cutoff);
    std::size_t n_chunks = (primes.size() + kPrimeChunk - 1) / kPrimeChunk;

    // Per-chunk compensated log sums, combined in fixed chunk order so the
    // result is identical for any thread count.
    std::vector<long double> chunk_sum(n_chunks, 0.0L);
    par::run_chunks(n_chunks, [&](std::size_t ci) {
        long double sum = 0.0L, comp = 0.0L;
        std::size_t lo = ci * kPrimeChunk;
        std::size_t hi = std::min(primes.size(), lo + kPrimeChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            long double term = std::log(static_cast<long double>(
                local_from_diffs(which, diffs, primes[i])));
            long double y = term - comp;
            long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        chunk_sum[ci] = sum;
    });
    long double logsum = 0.0L, comp = 0.0L;
    for (long double s : chunk_sum) {
        long double y = s - comp;
        long double t = logsum + y;
        comp = (t - logsum) - y;
        logsum = t;
    }

    EulerProductResult res;
    res.prime_cutoff = prime_cutoff;
    res.series_truncation = truncation;
    res.tail_estimate = tail;
    long double product = std::exp(logsum);
    res.value = static_cast<double>(
        which == WhichConstant::A ? product : (long double)(kPi / 4) * product);
    return res;
}

double main_term_constant(FunctionFamily fam) {
    static std::mutex m;
    static std::map<std::pair<int, int>, double> cache;
    std::pair<int, int> key{static_cast<int>(fam.family), fam.k};
    {
        std::lock_guard lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    double value;
    switch (fam.family) {
    case Family::FrakTEK:     value = compute_constant(WhichConstant::C, fam.k).value; break;
    case Family::FrakTEKStar: value = compute_constant(WhichConstant::CStar, fam.k).value; break;
    case Family::TauEKStar:   value = compute_constant(WhichConstant::A, fam.k).value; break;
    default: {
        // rational Euler product with the tau_k base (no published label)
        auto diffs = base_diffs(WhichConstant::C, fam.k, 64);
        auto primes = primes_up_to(1000000);
        long double prod = 1.0L;
        for (auto p : primes) prod *= g_of(diffs, static_cast<double>(p));
        value = static_cast<double>(prod);
        break;
    }
    }
    std::lock_guard lock(m);
    cache.emplace(key, value);
    return value;
}

double zeta_real(double s) {
    if (!(s == 0.5 || s > 1.0))
        throw std::domain_error("zeta_real: s must be 1/2 or > 1");
    const int N = 1000;
    long double sum = 0.0L;
    for (int n = 1; n < N; ++n) sum += std::pow(static_cast<long double>(n), -s);
    long double Nf = N;
    sum += std::pow(Nf, 1.0L - s) / (s - 1.0L);
    sum += 0.5L * std::pow(Nf, (long double)-s);
    // Euler-Maclaurin correction terms with B2, B4, B6, B8
    const long double bern[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30};
    long double rising = s;                       // s (s+1) ... accumulated below
    long double npow = std::pow(Nf, -s - 1.0L);
    long double fact = 2.0L;                      // (2j)!
    for (int j = 0; j < 4; ++j) {
        sum += bern[j] / fact * rising * npow;
        // extend s(s+1)...(s+2j) and (2j)! -> (2j+2)!
        rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
        fact *= (2 * j + 3) * (2 * j + 4);
        npow /= Nf * Nf;
    }
    return static_cast<double>(sum);
}

} // namespace gdiv
