#include "gdiv/champions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdiv/primes.hpp"
#include "gdiv/summing.hpp"

namespace gdiv {

namespace {

// llog needs N >= 16 to stay clear of zero.
constexpr std::uint64_t kMinArgument = 16;

double order_ratio(std::int64_t f, std::uint64_t n) {
    if (f <= 1) return 0.0;
    double logn = std::log(static_cast<double>(n));
    return std::log(static_cast<double>(f)) * std::log(logn) / logn;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<ChampionRecord> champion_scan(FunctionFamily fam, std::uint64_t x_max) {
    if (x_max < kMinArgument)
        throw std::domain_error("champion_scan: x_max must be >= 16");
    std::vector<ChampionRecord> records;
    double best = 0.0;
    if (!gaussian_domain(fam.family)) {
        auto values = multiplicative_value_table(fam, x_max);
        for (std::uint64_t n = kMinArgument; n <= x_max; ++n) {
            double r = order_ratio(values[n], n);
            if (r > best) {
                best = r;
                records.push_back({std::to_string(n), n, r, true});
            }
        }
        return records;
    }
    // Gaussian family: enumerate canonical lattice classes, sort by norm.
    struct Entry {
        std::uint64_t n;
        std::int64_t f;
        GaussInt z;
    };
    std::vector<Entry> entries;
    std::uint64_t amax = isqrt_u64(x_max);
    for (std::uint64_t a = 1; a <= amax; ++a) {
        std::uint64_t rem = x_max - a * a;
        for (std::uint64_t b = 0; b * b <= rem; ++b) {
            GaussInt z{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
            std::uint64_t n = norm(z);
            if (n < kMinArgument) continue;
            entries.push_back({n, eval(fam, z), z});
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& l, const Entry& r) {
                  if (l.n != r.n) return l.n < r.n;
                  return norm_less(l.z, r.z);
              });
    for (const auto& e : entries) {
        double r = order_ratio(e.f, e.n);
        if (r > best) {
            best = r;
            records.push_back({format_gauss(e.z), e.n, r, true});
        }
    }
    return records;
}

double extremal_construction(FunctionFamily fam, int l, std::uint64_t X) {
    if (l < 1) throw std::domain_error("extremal_construction: l must be >= 1");
    if (X < 100) throw std::domain_error("extremal_construction: X must be >= 100");
    std::int64_t fl = exponent_base(fam.family, fam.k,
                                    static_cast<std::uint64_t>(l));
    if (fl <= 1) return 0.0;
    std::uint64_t root = isqrt_u64(X);
    long long r = 0;
    double logsum = 0.0;
    for_primes_up_to(X, [&](std::uint64_t p) {
        if (p == 2) {
            r += 1;
            logsum += std::log(2.0);
        } else if (p % 4 == 1) {
            r += 2;
            logsum += 2.0 * std::log(static_cast<double>(p));
        } else if (p <= root) {
            r += 1;
            logsum += 2.0 * std::log(static_cast<double>(p));
        }
    });
    double log_n_alpha = static_cast<double>(l) * logsum;
    return static_cast<double>(r) * std::log(static_cast<double>(fl)) *
           std::log(log_n_alpha) / log_n_alpha;
}

PrimeCountReport prime_counting_report(std::uint64_t x) {
    if (x < 2) throw std::domain_error("prime_counting_report: x must be >= 2");
    PrimeCountReport rep;
    rep.x = x;
    std::uint64_t root = isqrt_u64(x);
    for_primes_up_to(x, [&](std::uint64_t p) {
        if (p == 2) {
            rep.count += 1;
            rep.logsum += std::log(2.0);
        } else if (p % 4 == 1) {
            rep.count += 2;
            rep.logsum += 2.0 * std::log(static_cast<double>(p));
        } else if (p <= root) {
            rep.count += 1;
            rep.logsum += 2.0 * std::log(static_cast<double>(p));
        }
    });
    double lx = std::log(static_cast<double>(x));
    rep.count_ratio = static_cast<double>(rep.count) / (static_cast<double>(x) / lx);
    rep.logsum_ratio = rep.logsum / static_cast<double>(x);
    return rep;
}

} // namespace gdiv
