#include "gdiv/divisors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gdiv/primes.hpp"

namespace gdiv {

bool gaussian_domain(Family f) {
    return f == Family::FrakTEK || f == Family::FrakTEKStar;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::TauEK:       return "tau_e_k";
    case Family::TauEKStar:   return "tau_e_k_star";
    case Family::FrakTEK:     return "frak_t_e_k";
    default:                  return "frak_t_e_k_star";
    }
}

Family parse_family(std::string_view name) {
    if (name == "tau_e_k") return Family::TauEK;
    if (name == "tau_e_k_star") return Family::TauEKStar;
    if (name == "frak_t_e_k") return Family::FrakTEK;
    if (name == "frak_t_e_k_star") return Family::FrakTEKStar;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

std::int64_t tau_k(int k, std::uint64_t n) {
    if (k < 1) throw std::domain_error("tau_k: k must be >= 1");
    if (n == 0) throw std::domain_error("tau_k of zero");
    std::int64_t v = 1;
    for (auto [p, a] : factor_rational(n).factors)
        v = checked_mul(v, binomial(k + a - 1, a));
    return v;
}

std::int64_t frak_t_k(int k, std::uint64_t n) {
    if (k < 2) throw std::domain_error("frak_t_k: k must be >= 2");
    if (n == 0) throw std::domain_error("frak_t_k of zero");
    std::int64_t v = 1;
    for (auto [p, a] : factor_rational(n).factors) {
        if (p == 2) {
            v = checked_mul(v, binomial(k + 2 * a - 1, 2 * a));
        } else if (p % 4 == 1) {
            std::int64_t b = binomial(k + a - 1, a);
            v = checked_mul(v, checked_mul(b, b));
        } else {
            v = checked_mul(v, binomial(k + a - 1, a));
        }
    }
    return v;
}

std::int64_t frak_t_k(int k, GaussInt alpha) {
    if (k < 2) throw std::domain_error("frak_t_k: k must be >= 2");
    if (alpha.is_zero()) throw std::domain_error("frak_t_k of zero");
    if (alpha.im == 0 && alpha.re > 0)
        return frak_t_k(k, static_cast<std::uint64_t>(alpha.re));
    std::int64_t v = 1;
    for (const auto& [p, a] : factor_gauss(alpha).factors)
        v = checked_mul(v, binomial(k + a - 1, a));
    return v;
}

std::int64_t exponent_base(Family fam, int k, std::uint64_t a) {
    if (a == 0) return 1;
    switch (fam) {
    case Family::TauEK:
    case Family::FrakTEK:
        return tau_k(k, a);
    default:
        return frak_t_k(k, a);
    }
}

std::int64_t eval(FunctionFamily fam, std::uint64_t n) {
    if (gaussian_domain(fam.family))
        throw std::domain_error("eval: Gaussian family applied to a rational argument");
    if (n == 0) throw std::domain_error("eval of zero");
    std::int64_t v = 1;
    for (auto [p, a] : factor_rational(n).factors)
        v = checked_mul(v, exponent_base(fam.family, fam.k, a));
    return v;
}

std::int64_t eval(FunctionFamily fam, GaussInt alpha) {
    if (!gaussian_domain(fam.family))
        throw std::domain_error("eval: rational family applied to a Gaussian argument");
    if (alpha.is_zero()) throw std::domain_error("eval of zero");
    std::int64_t v = 1;
    for (const auto& [p, a] : factor_gauss(alpha).factors)
        v = checked_mul(v, exponent_base(fam.family, fam.k, a));
    return v;
}

std::int64_t brute_force_tau_k(int k, std::uint64_t n) {
    if (n > 1000000 || k > 4)
        throw std::domain_error("brute_force_tau_k: bound exceeded");
    if (k == 1) return 1;
    std::int64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        count += brute_force_tau_k(k - 1, n / d);
        if (d != n / d) count += brute_force_tau_k(k - 1, d);
    }
    return count;
}

namespace {

std::vector<GaussInt> canonical_divisors(GaussInt alpha) {
    auto gf = factor_gauss(alpha);
    std::vector<GaussInt> divs{{1, 0}};
    for (const auto& [p, e] : gf.factors) {
        std::vector<GaussInt> next;
        next.reserve(divs.size() * (e + 1));
        for (GaussInt d : divs) {
            GaussInt v = d;
            next.push_back(canonical_associate(v).first);
            for (int i = 1; i <= e; ++i) {
                v = mul(v, p);
                next.push_back(canonical_associate(v).first);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), norm_less);
    return divs;
}

void count_tuples(const std::vector<GaussInt>& divs, GaussInt target,
                  std::uint64_t target_norm, int slots, GaussInt prod,
                  std::int64_t& count) {
    if (slots == 0) {
        if (canonical_associate(prod).first == target) ++count;
        return;
    }
    for (GaussInt d : divs) {
        std::uint64_t n = norm(prod) * norm(d);
        if (n > target_norm || target_norm % n != 0) continue;
        count_tuples(divs, target, target_norm, slots - 1, mul(prod, d), count);
    }
}

} // namespace

std::int64_t brute_force_frak_t_k(int k, GaussInt alpha, std::uint64_t norm_bound) {
    if (alpha.is_zero()) throw std::domain_error("brute_force_frak_t_k of zero");
    if (norm(alpha) > norm_bound || k > 4)
        throw std::domain_error("brute_force_frak_t_k: bound exceeded");
    GaussInt target = canonical_associate(alpha).first;
    auto divs = canonical_divisors(alpha);
    std::int64_t count = 0;
    count_tuples(divs, target, norm(target), k, {1, 0}, count);
    return count;
}

MaxLogRatio max_log_ratio(BaseFunction base, int k, std::uint64_t n_max) {
    if (n_max < 2) throw std::domain_error("max_log_ratio: n_max must be >= 2");
    MaxLogRatio best{1, 0.0};
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        std::int64_t f = base == BaseFunction::TauK ? tau_k(k, n) : frak_t_k(k, n);
        double ratio = std::log(static_cast<double>(f)) / static_cast<double>(n);
        if (ratio > best.value) best = {n, ratio};
    }
    return best;
}

} // namespace gdiv
