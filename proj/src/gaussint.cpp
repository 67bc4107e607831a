#include "gdiv/gaussint.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace gdiv {

std::uint64_t norm(GaussInt z) {
    unsigned __int128 n = (unsigned __int128)((__int128)z.re * z.re) +
                          (unsigned __int128)((__int128)z.im * z.im);
    if (n > UINT64_MAX) throw std::overflow_error("norm exceeds uint64");
    return static_cast<std::uint64_t>(n);
}

GaussInt add(GaussInt z, GaussInt w) {
    return {checked_add(z.re, w.re), checked_add(z.im, w.im)};
}

GaussInt sub(GaussInt z, GaussInt w) {
    return {checked_sub(z.re, w.re), checked_sub(z.im, w.im)};
}

GaussInt mul(GaussInt z, GaussInt w) {
    return {checked_sub(checked_mul(z.re, w.re), checked_mul(z.im, w.im)),
            checked_add(checked_mul(z.re, w.im), checked_mul(z.im, w.re))};
}

GaussInt mul_unit(GaussInt z, Unit u) {
    switch (u) {
    case Unit::One:      return z;
    case Unit::I:        return mul_i(z);
    case Unit::MinusOne: return neg(z);
    default:             return {z.im, checked_sub(0, z.re)};
    }
}

bool is_unit(GaussInt z) { return norm(z) == 1; }

bool is_canonical(GaussInt z) { return z.re >= 1 && z.im >= 0; }

std::pair<GaussInt, Unit> canonical_associate(GaussInt z) {
    if (z.is_zero()) throw std::domain_error("canonical_associate of zero");
    GaussInt c = z;
    for (int t = 0; t < 4; ++t) {
        if (is_canonical(c)) return {c, unit_pow_i(4 - t)};
        c = mul_i(c);
    }
    throw std::logic_error("no canonical associate found");
}

bool divides(GaussInt w, GaussInt z) {
    if (w.is_zero()) return z.is_zero();
    __int128 n = (__int128)w.re * w.re + (__int128)w.im * w.im;
    __int128 nr = (__int128)z.re * w.re + (__int128)z.im * w.im;
    __int128 ni = (__int128)z.im * w.re - (__int128)z.re * w.im;
    return nr % n == 0 && ni % n == 0;
}

GaussInt divide_exact(GaussInt z, GaussInt w) {
    if (w.is_zero()) throw std::domain_error("division by zero");
    __int128 n = (__int128)w.re * w.re + (__int128)w.im * w.im;
    __int128 nr = (__int128)z.re * w.re + (__int128)z.im * w.im;
    __int128 ni = (__int128)z.im * w.re - (__int128)z.re * w.im;
    if (nr % n != 0 || ni % n != 0)
        throw std::domain_error("non-exact Gaussian division");
    __int128 qr = nr / n, qi = ni / n;
    if (qr > INT64_MAX || qr < INT64_MIN || qi > INT64_MAX || qi < INT64_MIN)
        throw std::overflow_error("quotient out of int64 range");
    return {static_cast<std::int64_t>(qr), static_cast<std::int64_t>(qi)};
}

bool norm_less(GaussInt a, GaussInt b) {
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.im != b.im) return a.im < b.im;
    return a.re < b.re;
}

namespace {

void skip_spaces(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Parses [sign] digits, or [sign] alone when digits are optional (for "i").
bool parse_int(std::string_view s, std::size_t& i, bool& any_digits,
               std::int64_t& out, int sign) {
    any_digits = false;
    unsigned long long v = 0;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
        if (v > static_cast<unsigned long long>(INT64_MAX))
            throw std::overflow_error("Gaussian literal out of range");
        ++i;
    }
    any_digits = i > start;
    out = sign * static_cast<std::int64_t>(v);
    return any_digits;
}

} // namespace

GaussInt parse_gauss(std::string_view s) {
    std::size_t i = 0;
    bool have_re = false, have_im = false;
    std::int64_t re = 0, im = 0;

    skip_spaces(s, i);
    for (int term = 0; term < 2; ++term) {
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (term == 0 && s[i] == '+') sign = 1;
            else sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_spaces(s, i);
        } else if (term == 1) {
            throw std::invalid_argument("expected '+' or '-' in Gaussian literal");
        }
        bool digits = false;
        std::int64_t v = 0;
        parse_int(s, i, digits, v, sign);
        skip_spaces(s, i);
        bool imag = i < s.size() && (s[i] == 'i' || s[i] == 'I');
        if (imag) ++i;
        if (!digits && !imag)
            throw std::invalid_argument("malformed Gaussian literal");
        if (imag) {
            if (have_im) throw std::invalid_argument("duplicate imaginary part");
            im = digits ? v : sign; // bare "i" / "-i"
            have_im = true;
        } else {
            if (have_re) throw std::invalid_argument("duplicate real part");
            re = v;
            have_re = true;
        }
        skip_spaces(s, i);
    }
    if (i != s.size() || (!have_re && !have_im))
        throw std::invalid_argument("malformed Gaussian literal");
    return {re, im};
}

std::string format_gauss(GaussInt z) {
    if (z.im == 0) return std::to_string(z.re);
    std::string out = std::to_string(z.re);
    out += z.im < 0 ? '-' : '+';
    // avoid negating INT64_MIN
    std::string mag = std::to_string(z.im);
    if (z.im < 0) mag.erase(0, 1);
    out += mag;
    out += 'i';
    return out;
}

} // namespace gdiv
