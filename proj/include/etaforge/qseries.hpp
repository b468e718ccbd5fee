// Exact truncated q-expansions. The expansion of an eta quotient is a
// leading power of q (a rational with denominator dividing 24) times an
// integer power series with constant term 1; series arithmetic is dense and
// exact.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eta.hpp"

namespace etaforge {

struct QSeries {
    Rat leading_exponent;      // exponent of q on the leading term
    std::vector<Int> coeffs;   // coeffs[i] multiplies q^(leading_exponent + i)
};

inline std::vector<Int> series_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                                   std::size_t terms) {
    std::vector<Int> r(terms);
    for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Multiplicative inverse of a series with constant term 1.
inline std::vector<Int> series_inverse(const std::vector<Int>& a, std::size_t terms) {
    if (a.empty() || a[0] != 1)
        throw std::invalid_argument("series inversion requires constant term 1");
    std::vector<Int> r(terms);
    r[0] = 1;
    for (std::size_t n = 1; n < terms; ++n) {
        Int s = 0;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) s += a[i] * r[n - i];
        r[n] = -s;
    }
    return r;
}

inline std::vector<Int> series_pow(std::vector<Int> a, unsigned long long e,
                                   std::size_t terms) {
    std::vector<Int> r(terms);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = series_mul(r, a, terms);
        a = series_mul(a, a, terms);
        e >>= 1;
    }
    return r;
}

// prod_{n >= 1} (1 - q^(d n)) truncated, by the pentagonal-number expansion
// sum_j (-1)^j q^(d j (3j-1)/2).
inline std::vector<Int> euler_factor(long long d, std::size_t terms) {
    std::vector<Int> r(terms);
    r[0] = 1;
    for (long long j = 1;; ++j) {
        long long g1 = d * (j * (3 * j - 1) / 2);
        long long g2 = d * (j * (3 * j + 1) / 2);
        if (g1 >= static_cast<long long>(terms) && g2 >= static_cast<long long>(terms)) break;
        Int sign = (j % 2 == 0) ? 1 : -1;
        if (g1 < static_cast<long long>(terms)) r[g1] += sign;
        if (g2 < static_cast<long long>(terms)) r[g2] += sign;
    }
    return r;
}

inline QSeries q_expansion(const EtaQuotient& f, std::size_t terms = 50) {
    if (terms < 1) throw std::invalid_argument("q_expansion needs at least one term");
    Int scaled_lead = 0;   // 24 * leading exponent = sum d X_d
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        scaled_lead += Int(f.data->basis.divisors[i]) * f.exponents[i];

    std::vector<Int> acc(terms);
    acc[0] = 1;
    for (std::size_t i = 0; i < f.exponents.size(); ++i) {
        long long e = f.exponents[i];
        if (e == 0) continue;
        std::vector<Int> base = euler_factor(f.data->basis.divisors[i], terms);
        if (e < 0) base = series_inverse(base, terms);
        acc = series_mul(acc, series_pow(base, static_cast<unsigned long long>(e < 0 ? -e : e), terms),
                         terms);
    }
    return {Rat(scaled_lead, 24), std::move(acc)};
}

}  // namespace etaforge
