#include "gdiv/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gdiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 isqrt64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

PrimeClass classify(u64 p) {
    if (!is_prime(p)) throw std::domain_error("classify: argument is not prime");
    if (p == 2) return PrimeClass::Ramified;
    return p % 4 == 1 ? PrimeClass::Split : PrimeClass::Inert;
}

namespace {

// Rounded Gaussian division, |rem| < |b| in norm.
GaussInt gauss_mod(GaussInt a, GaussInt b) {
    __int128 n = (__int128)b.re * b.re + (__int128)b.im * b.im;
    __int128 nr = (__int128)a.re * b.re + (__int128)a.im * b.im;
    __int128 ni = (__int128)a.im * b.re - (__int128)a.re * b.im;
    auto round_div = [](__int128 x, __int128 d) -> std::int64_t {
        __int128 q = x >= 0 ? (x + d / 2) / d : -((-x + d / 2) / d);
        return static_cast<std::int64_t>(q);
    };
    GaussInt q{round_div(nr, n), round_div(ni, n)};
    return sub(a, mul(q, b));
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        GaussInt r = gauss_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::mutex split_cache_mutex;
std::unordered_map<u64, GaussInt> split_cache;

} // namespace

GaussInt split_prime(u64 p) {
    if (classify(p) != PrimeClass::Split)
        throw std::domain_error("split_prime: prime does not split");
    {
        std::lock_guard lock(split_cache_mutex);
        auto it = split_cache.find(p);
        if (it != split_cache.end()) return it->second;
    }
    // r with r² ≡ -1 (mod p) via a quadratic non-residue
    u64 r = 0;
    for (u64 c = 2;; ++c) {
        if (powmod(c, (p - 1) / 2, p) == p - 1) {
            r = powmod(c, (p - 1) / 4, p);
            break;
        }
    }
    GaussInt g = gauss_gcd({static_cast<std::int64_t>(p), 0},
                           {static_cast<std::int64_t>(r), 1});
    std::int64_t a = std::abs(g.re), b = std::abs(g.im);
    if (a < b) std::swap(a, b);
    GaussInt result{a, b};
    if (norm(result) != p || !(a > b && b > 0))
        throw std::logic_error("split_prime: gcd did not yield a norm-p prime");
    std::lock_guard lock(split_cache_mutex);
    split_cache.emplace(p, result);
    return result;
}

bool is_gaussian_prime(GaussInt z) {
    u64 n = norm(z);
    if (n == 0 || n == 1)
        throw std::domain_error("is_gaussian_prime: zero or unit input");
    if (z.re == 0 || z.im == 0) {
        u64 q = static_cast<u64>(std::abs(z.re + z.im)); // one part is zero
        return q % 4 == 3 && is_prime(q);
    }
    return is_prime(n);
}

std::uint64_t RationalFactorization::value() const {
    u64 v = 1;
    for (auto [p, a] : factors)
        for (int i = 0; i < a; ++i) v = checked_umul(v, p);
    return v;
}

namespace {

void rho_factor(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    // Brent's cycle variant
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) {
            rho_factor(d, out);
            rho_factor(n / d, out);
            return;
        }
    }
}

} // namespace

RationalFactorization factor_rational(u64 n) {
    if (n == 0) throw std::domain_error("factor_rational of zero");
    RationalFactorization rf;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        int a = 0;
        while (n % p == 0) { n /= p; ++a; }
        if (a) rf.factors.emplace_back(p, a);
    }
    for (u64 p = 17; p * p <= n && p < 100000; p += 2) {
        int a = 0;
        while (n % p == 0) { n /= p; ++a; }
        if (a) rf.factors.emplace_back(p, a);
    }
    if (n > 1) {
        std::vector<u64> rest;
        rho_factor(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            rf.factors.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(rf.factors.begin(), rf.factors.end());
    return rf;
}

GaussInt GaussFactorization::value() const {
    GaussInt v = unit_value(unit);
    for (const auto& [p, a] : factors)
        for (int i = 0; i < a; ++i) v = mul(v, p);
    return v;
}

GaussFactorization factor_gauss(GaussInt z) {
    if (z.is_zero()) throw std::domain_error("factor_gauss of zero");
    GaussFactorization gf;
    GaussInt rest = z;
    auto nf = factor_rational(norm(z));
    for (auto [p, e] : nf.factors) {
        if (p == 2) {
            const GaussInt ram{1, 1};
            for (int i = 0; i < e; ++i) rest = divide_exact(rest, ram);
            gf.factors.emplace_back(ram, e);
        } else if (p % 4 == 3) {
            if (e % 2 != 0)
                throw std::logic_error("factor_gauss: odd inert exponent in norm");
            GaussInt q{static_cast<std::int64_t>(p), 0};
            for (int i = 0; i < e / 2; ++i) rest = divide_exact(rest, q);
            gf.factors.emplace_back(q, e / 2);
        } else {
            GaussInt pi = split_prime(p);
            GaussInt pibar{pi.im, pi.re};
            int e1 = 0;
            while (e1 < e && divides(pi, rest)) {
                rest = divide_exact(rest, pi);
                ++e1;
            }
            int e2 = e - e1;
            for (int i = 0; i < e2; ++i) rest = divide_exact(rest, pibar);
            if (e1) gf.factors.emplace_back(pi, e1);
            if (e2) gf.factors.emplace_back(pibar, e2);
        }
    }
    if (!is_unit(rest))
        throw std::logic_error("factor_gauss: non-unit residue");
    if (rest == GaussInt{1, 0}) gf.unit = Unit::One;
    else if (rest == GaussInt{0, 1}) gf.unit = Unit::I;
    else if (rest == GaussInt{-1, 0}) gf.unit = Unit::MinusOne;
    else gf.unit = Unit::MinusI;
    std::sort(gf.factors.begin(), gf.factors.end(),
              [](const auto& a, const auto& b) { return norm_less(a.first, b.first); });
    return gf;
}

void for_primes_up_to(u64 n, const std::function<void(u64)>& fn) {
    if (n < 2) return;
    u64 root = isqrt64(n);
    std::vector<std::uint32_t> base;
    {
        std::vector<bool> sieve(root + 1, true);
        for (u64 i = 2; i <= root; ++i) {
            if (!sieve[i]) continue;
            base.push_back(static_cast<std::uint32_t>(i));
            for (u64 j = i * i; j <= root; j += i) sieve[j] = false;
        }
    }
    for (std::uint32_t p : base) fn(p);
    constexpr u64 kSegment = 1u << 20;
    std::vector<bool> seg;
    for (u64 lo = root + 1; lo <= n; lo += kSegment) {
        u64 hi = std::min(n, lo + kSegment - 1);
        seg.assign(hi - lo + 1, true);
        for (std::uint32_t p : base) {
            u64 start = ((lo + p - 1) / p) * p;
            if (start < (u64)p * p) start = (u64)p * p;
            for (u64 j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (u64 v = lo; v <= hi; ++v)
            if (seg[v - lo]) fn(v);
    }
}

std::vector<std::uint32_t> primes_up_to(u64 n) {
    std::vector<std::uint32_t> out;
    if (n >= 2) out.reserve(static_cast<std::size_t>(n / (std::log(double(n)) - 1.1) + 16));
    for_primes_up_to(n, [&](u64 p) { out.push_back(static_cast<std::uint32_t>(p)); });
    return out;
}

std::vector<GaussInt> gaussian_primes_up_to(u64 x) {
    std::vector<GaussInt> out;
    if (x < 2) return out;
    u64 root = isqrt64(x);
    for_primes_up_to(x, [&](u64 p) {
        if (p == 2) {
            out.push_back({1, 1});
        } else if (p % 4 == 1) {
            GaussInt pi = split_prime(p);
            out.push_back(pi);
            out.push_back({pi.im, pi.re});
        } else if (p <= root) {
            out.push_back({static_cast<std::int64_t>(p), 0});
        }
    });
    std::sort(out.begin(), out.end(), norm_less);
    return out;
}

SpfTable::SpfTable(std::uint32_t n) : spf(static_cast<std::size_t>(n) + 1, 0) {
    if (n >= 1) spf[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
}

} // namespace gdiv
