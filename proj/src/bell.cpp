#include "gdiv/bell.hpp"

#include <stdexcept>

#include "gdiv/checked.hpp"

namespace gdiv {

bool TruncatedSeries::is_one() const {
    if (c.empty() || c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

TruncatedSeries series_one(int truncation) {
    TruncatedSeries s;
    s.c.assign(static_cast<std::size_t>(truncation) + 1, 0);
    s.c[0] = 1;
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series_mul: truncation mismatch");
    int t = a.truncation();
    TruncatedSeries r;
    r.c.assign(static_cast<std::size_t>(t) + 1, 0);
    for (int i = 0; i <= t; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= t; ++j)
            r.c[i + j] = checked_add(r.c[i + j], checked_mul(a.c[i], b.c[j]));
    }
    return r;
}

TruncatedSeries binomial_factor(int m, std::int64_t e, int truncation) {
    if (m < 1) throw std::domain_error("binomial_factor: shift must be >= 1");
    TruncatedSeries s = series_one(truncation);
    if (e >= 0) {
        // (1 - y)^e = Σ C(e, j) (-y)^j
        for (std::int64_t j = 1; j <= e && j * m <= truncation; ++j) {
            std::int64_t coeff = binomial(e, j);
            s.c[static_cast<std::size_t>(j * m)] = (j % 2 == 0) ? coeff : -coeff;
        }
    } else {
        // (1 - y)^{-n} = Σ C(n + j - 1, j) y^j
        std::int64_t n = -e;
        for (std::int64_t j = 1; j * m <= truncation; ++j)
            s.c[static_cast<std::size_t>(j * m)] = binomial(n + j - 1, j);
    }
    return s;
}

TruncatedSeries bell_series(FunctionFamily fam, int truncation) {
    if (truncation < 1) throw std::domain_error("bell_series: truncation must be >= 1");
    TruncatedSeries s;
    s.c.resize(static_cast<std::size_t>(truncation) + 1);
    for (int a = 0; a <= truncation; ++a)
        s.c[static_cast<std::size_t>(a)] =
            exponent_base(fam.family, fam.k, static_cast<std::uint64_t>(a));
    return s;
}

ZetaFactorization derive_zeta_exponents(const TruncatedSeries& s, ZetaBase base) {
    if (s.c.empty() || s.c[0] != 1)
        throw std::domain_error("derive_zeta_exponents: constant term must be 1");
    int t = s.truncation();
    ZetaFactorization zf;
    zf.base = base;
    TruncatedSeries residual = s;
    for (int j = 1; j <= t; ++j) {
        std::int64_t e = residual.c[static_cast<std::size_t>(j)];
        zf.terms.emplace_back(j, e);
        if (e != 0) residual = series_mul(residual, binomial_factor(j, e, t));
    }
    zf.remainder = residual;
    zf.remainder_order = t + 1;
    for (int j = 1; j <= t; ++j) {
        if (residual.c[static_cast<std::size_t>(j)] != 0) {
            zf.remainder_order = j;
            break;
        }
    }
    return zf;
}

namespace {

// p(k)/q with an exactness check.
std::int64_t eval_poly_div(std::int64_t num, std::int64_t q) {
    if (num % q != 0)
        throw std::logic_error("exponent polynomial is not integral");
    return num / q;
}

} // namespace

std::vector<std::int64_t> lemma_exponents(Family fam, int k, int truncation) {
    std::int64_t K = k;
    std::int64_t k2 = K * K, k3 = k2 * K, k4 = k3 * K;
    std::vector<std::int64_t> e(static_cast<std::size_t>(truncation), 0);
    auto set = [&](int shift, std::int64_t v) {
        if (shift <= truncation) e[static_cast<std::size_t>(shift - 1)] = v;
    };
    if (fam == Family::FrakTEK) {
        set(1, 1);
        set(2, K - 1);
        set(5, eval_poly_div(K - k2, 2));
        set(6, eval_poly_div(-k3 + 6 * k2 - 5 * K, 6));
        set(7, eval_poly_div(k3 - 4 * k2 + 3 * K, 2));
        set(8, eval_poly_div(3 * k4 - 26 * k3 + 57 * k2 - 34 * K, 24));
    } else if (fam == Family::TauEKStar || fam == Family::FrakTEKStar) {
        set(1, 1);
        set(2, eval_poly_div(k2 + K - 2, 2));
        set(3, eval_poly_div(-k2 + K, 2));
        set(4, eval_poly_div(-k4 + 7 * k2 - 6 * K, 12));
        set(5, eval_poly_div(5 * k4 - 6 * k3 - 5 * k2 + 6 * K, 24));
    } else {
        throw std::domain_error("no published factorization for tau_e_k");
    }
    return e;
}

int default_truncation(Family fam) {
    return fam == Family::FrakTEK ? 8 : 5;
}

FactorizationReport verify_factorization(FunctionFamily fam, int truncation) {
    int t = truncation > 0 ? truncation : default_truncation(fam.family);
    FactorizationReport rep;
    rep.fam = fam;
    rep.truncation = t;
    rep.exponents = lemma_exponents(fam.family, fam.k, t);

    TruncatedSeries residual = bell_series(fam, t);
    for (int j = 1; j <= t; ++j) {
        std::int64_t e = rep.exponents[static_cast<std::size_t>(j - 1)];
        if (e != 0) residual = series_mul(residual, binomial_factor(j, e, t));
    }
    rep.residual = residual;
    rep.pass = true;
    for (int j = 1; j <= t; ++j) {
        if (residual.c[static_cast<std::size_t>(j)] != 0) {
            rep.pass = false;
            rep.first_bad_coefficient = j;
            break;
        }
    }
    ZetaBase base = gaussian_domain(fam.family) ? ZetaBase::HeckeZ : ZetaBase::Zeta;
    auto derived = derive_zeta_exponents(bell_series(fam, t), base);
    rep.derived_matches = true;
    for (int j = 1; j <= t; ++j) {
        if (derived.terms[static_cast<std::size_t>(j - 1)].second !=
            rep.exponents[static_cast<std::size_t>(j - 1)]) {
            rep.derived_matches = false;
            rep.pass = false;
            if (rep.first_bad_coefficient < 0) rep.first_bad_coefficient = j;
            break;
        }
    }
    return rep;
}

} // namespace gdiv
