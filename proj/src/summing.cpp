#include "gdiv/summing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdiv/constants.hpp"
#include "gdiv/parallel.hpp"
#include "gdiv/primes.hpp"

namespace gdiv {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

// base(a) memoized up to the largest exponent a norm <= x can carry.
std::vector<std::int64_t> base_table(FunctionFamily fam, std::uint64_t x) {
    int amax = 1;
    while ((1ull << amax) <= x && amax < 62) ++amax;
    std::vector<std::int64_t> base(static_cast<std::size_t>(amax) + 1);
    for (int a = 0; a <= amax; ++a)
        base[static_cast<std::size_t>(a)] =
            exponent_base(fam.family, fam.k, static_cast<std::uint64_t>(a));
    return base;
}

// Contribution of all classes above p at norm p^a.
std::int64_t local_norm_value(const std::vector<std::int64_t>& base,
                              std::uint64_t p, int a) {
    if (p == 2) return base[static_cast<std::size_t>(a)];
    if (p % 4 == 3)
        return a % 2 ? 0 : base[static_cast<std::size_t>(a / 2)];
    std::int64_t s = 0;
    for (int i = 0; i <= a; ++i)
        s = checked_add(s, checked_mul(base[static_cast<std::size_t>(i)],
                                       base[static_cast<std::size_t>(a - i)]));
    return s;
}

std::int64_t chunked_sum(const std::vector<std::int64_t>& v, std::uint64_t x) {
    std::size_t n_chunks = (x + kSegmentSize) / kSegmentSize;
    std::vector<std::int64_t> partial(n_chunks, 0);
    par::run_chunks(n_chunks, [&](std::size_t ci) {
        std::uint64_t lo = ci * kSegmentSize;
        std::uint64_t hi = std::min(x, lo + kSegmentSize - 1);
        std::int64_t s = 0;
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi; ++n)
            s = checked_add(s, v[n]);
        partial[ci] = s;
    });
    std::int64_t total = 0;
    for (std::int64_t s : partial) total = checked_add(total, s);
    return total;
}

} // namespace

NormCoefficientTable norm_coefficients(FunctionFamily fam, std::uint64_t x) {
    if (!gaussian_domain(fam.family))
        throw std::domain_error("norm_coefficients: rational family");
    if (x < 1) throw std::domain_error("norm_coefficients: x must be >= 1");
    NormCoefficientTable t{fam, x, {}};
    auto base = base_table(fam, x);
    SpfTable spf(static_cast<std::uint32_t>(x));
    t.b.assign(x + 1, 0);
    t.b[1] = 1;
    for (std::uint64_t n = 2; n <= x; ++n) {
        std::uint64_t p = spf[static_cast<std::uint32_t>(n)];
        std::uint64_t m = n;
        int a = 0;
        while (m % p == 0) { m /= p; ++a; }
        t.b[n] = checked_mul(t.b[m], local_norm_value(base, p, a));
    }
    return t;
}

std::vector<std::int64_t> multiplicative_value_table(FunctionFamily fam,
                                                     std::uint64_t x) {
    if (gaussian_domain(fam.family))
        throw std::domain_error("multiplicative_value_table: Gaussian family");
    auto base = base_table(fam, x);
    SpfTable spf(static_cast<std::uint32_t>(x));
    std::vector<std::int64_t> v(x + 1, 0);
    if (x >= 1) v[1] = 1;
    for (std::uint64_t n = 2; n <= x; ++n) {
        std::uint64_t p = spf[static_cast<std::uint32_t>(n)];
        std::uint64_t m = n;
        int a = 0;
        while (m % p == 0) { m /= p; ++a; }
        v[n] = checked_mul(v[m], base[static_cast<std::size_t>(a)]);
    }
    return v;
}

SummatoryReport summatory(FunctionFamily fam, std::uint64_t x) {
    if (x < 1) throw std::domain_error("summatory: x must be >= 1");
    SummatoryReport rep;
    rep.fam = fam;
    rep.x = x;
    if (gaussian_domain(fam.family)) {
        auto t = norm_coefficients(fam, x);
        rep.exact_sum = chunked_sum(t.b, x);
    } else {
        auto v = multiplicative_value_table(fam, x);
        rep.exact_sum = chunked_sum(v, x);
    }
    double c = main_term_constant(fam);
    rep.main_term = c * static_cast<double>(x);
    rep.residual = static_cast<double>(rep.exact_sum) - rep.main_term;
    rep.normalized_residual = rep.residual / std::sqrt(static_cast<double>(x));
    return rep;
}

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::int64_t lattice_summatory_oracle(FunctionFamily fam, std::uint64_t x,
                                      std::uint64_t bound) {
    if (x > bound) throw std::domain_error("lattice_summatory_oracle: bound exceeded");
    if (!gaussian_domain(fam.family))
        throw std::domain_error("lattice_summatory_oracle: rational family");
    std::uint64_t amax = isqrt_u64(x);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(amax) + 1, 0);
    par::run_chunks(amax, [&](std::size_t idx) {
        std::uint64_t a = idx + 1;
        std::uint64_t rem = x - a * a;
        std::int64_t s = 0;
        for (std::uint64_t b = 0; b * b <= rem; ++b)
            s = checked_add(s, eval(fam, GaussInt{static_cast<std::int64_t>(a),
                                                  static_cast<std::int64_t>(b)}));
        partial[a] = s;
    });
    std::int64_t total = 0;
    for (std::int64_t s : partial) total = checked_add(total, s);
    return total;
}

std::int64_t lattice_class_count(std::uint64_t x) {
    std::int64_t count = 0;
    for (std::uint64_t a = 1; a * a <= x; ++a)
        count += static_cast<std::int64_t>(isqrt_u64(x - a * a)) + 1;
    return count;
}

namespace {

std::int64_t count_tau_a_rec(int l, std::uint64_t x) {
    if (l == 0) return static_cast<std::int64_t>(x);
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d * d <= x; ++d)
        s = checked_add(s, count_tau_a_rec(l - 1, x / (d * d)));
    return s;
}

} // namespace

std::int64_t count_tau_a(int l, std::uint64_t x) {
    if (l < 1 || l > 4) throw std::domain_error("count_tau_a: l must be in 1..4");
    if (x < 1) throw std::domain_error("count_tau_a: x must be >= 1");
    return count_tau_a_rec(l, x);
}

ResidualTable residual_analysis(FunctionFamily fam,
                                const std::vector<std::uint64_t>& xs) {
    ResidualTable table;
    for (std::uint64_t x : xs) {
        auto rep = summatory(fam, x);
        table.rows.push_back({x, rep.exact_sum, rep.main_term, rep.residual,
                              rep.normalized_residual});
    }
    std::vector<double> mags;
    for (const auto& r : table.rows) mags.push_back(std::fabs(r.normalized));
    if (!mags.empty()) {
        std::sort(mags.begin(), mags.end());
        double median = mags[mags.size() / 2];
        table.bounded = mags.back() <= 10.0 * median;
    }
    return table;
}

} // namespace gdiv
