// Closed-form counting bounds attached to a level N. All are multiplicative
// expressions over the prime powers p^n exactly dividing N; empty products
// make every bound equal 1 at N = 1.
#pragma once

#include "arith.hpp"
#include "numtheory.hpp"

namespace etaforge {

// Number of divisors of N / p^n, the cofactor of the prime power p^n || N.
inline long long cofactor_divisor_count(const FactoredInt& n, std::size_t i) {
    long long r = 1;
    for (std::size_t j = 0; j < n.factors.size(); ++j)
        if (j != i) r *= n.factors[j].e + 1;
    return r;
}

// Product over p^n || N of (p^(2(n-1)) (p^2 - 1))^d(N/p^n). Always an
// integer; equals the determinant of the weight-denominator matrix B_N.
inline Int omega_prime_bound(const FactoredInt& n) {
    Int r = 1;
    for (std::size_t i = 0; i < n.factors.size(); ++i) {
        const auto& [p, e] = n.factors[i];
        Int block = int_pow(Int(p), 2 * (e - 1)) * (Int(p) * p - 1);
        long long cnt = cofactor_divisor_count(n, i);
        for (long long j = 0; j < cnt; ++j) r *= block;
    }
    return r;
}

inline Int omega_prime_bound(long long n) { return omega_prime_bound(factorize(n)); }

// (1/d!) prod (p^2-1)^d / (p+1)^(2 d(N/p^n))  +  2 sum d(N/p^n)
//   - 2^omega (omega - 1) - d,  with d = d(N).
inline Rat omega_dprime_bound(const FactoredInt& n) {
    long long d = num_divisors(n);
    int om = omega_count(n);
    Int num = 1, den = factorial(d);
    long long corr = 0;
    for (std::size_t i = 0; i < n.factors.size(); ++i) {
        const auto& [p, e] = n.factors[i];
        long long cnt = cofactor_divisor_count(n, i);
        num *= int_pow(Int(p) * p - 1, d);
        den *= int_pow(Int(p) + 1, 2 * cnt);
        corr += 2 * cnt;
    }
    Rat r(num, den);
    r += corr;
    r -= Int(int_pow(Int(2), om)) * (om - 1);
    r -= d;
    return r;
}

inline Rat omega_dprime_bound(long long n) { return omega_dprime_bound(factorize(n)); }

// Upper bound for the number of irreducible holomorphic eta quotients of
// level N, via the identity  Omega = d + Omega' - Omega''.
inline Rat omega_bound(const FactoredInt& n) {
    Rat r(omega_prime_bound(n));
    r += num_divisors(n);
    r -= omega_dprime_bound(n);
    return r;
}

inline Rat omega_bound(long long n) { return omega_bound(factorize(n)); }

// Variant counting only quotients of exact level N:
// Omega_0 = Omega - 2d + 2^omega + 1.
inline Rat omega_zero_bound(const FactoredInt& n) {
    Rat r = omega_bound(n);
    r -= 2 * num_divisors(n);
    r += int_pow(Int(2), omega_count(n));
    r += 1;
    return r;
}

inline Rat omega_zero_bound(long long n) { return omega_zero_bound(factorize(n)); }

}  // namespace etaforge
