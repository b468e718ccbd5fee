// Multiplicative arithmetic on factored integers: factorization, the divisor
// basis that indexes all matrices and vectors, and the classical functions
// phi, rad, d, omega, psi, kappa.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "arith.hpp"

namespace etaforge {

inline unsigned long long mulmod_u64(unsigned long long a, unsigned long long b,
                                     unsigned long long m) {
    return static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

inline unsigned long long powmod_u64(unsigned long long a, unsigned long long e,
                                     unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod_u64(a, d, n);
        if (x == 1 || x == static_cast<unsigned long long>(n) - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == static_cast<unsigned long long>(n) - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct PrimePower {
    long long p;
    int e;
};

struct FactoredInt {
    long long value = 1;
    std::vector<PrimePower> factors;  // primes strictly ascending

    bool valid() const {
        long long prod = 1;
        long long prev = 1;
        for (const auto& [p, e] : factors) {
            if (p <= prev || e < 1 || !is_prime(p)) return false;
            prev = p;
            for (int i = 0; i < e; ++i) prod *= p;
        }
        return prod == value;
    }
};

inline FactoredInt factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize requires a positive integer");
    FactoredInt f;
    f.value = n;
    long long rest = n;
    for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

// Divisors ordered lexicographically by prime-exponent vector, the smallest
// prime's exponent varying fastest. Position 0 is 1, the last position is N.
// This ordering makes Kronecker-product block indexing line up with divisor
// indexing (smallest prime = innermost block).
struct DivisorBasis {
    FactoredInt modulus;
    std::vector<long long> divisors;

    std::size_t size() const { return divisors.size(); }

    std::size_t index_of(long long d) const {
        auto it = std::find(divisors.begin(), divisors.end(), d);
        if (it == divisors.end())
            throw std::invalid_argument("not a divisor of the modulus");
        return static_cast<std::size_t>(it - divisors.begin());
    }
};

inline DivisorBasis divisor_basis(const FactoredInt& n) {
    DivisorBasis b;
    b.modulus = n;
    b.divisors = {1};
    for (const auto& [p, e] : n.factors) {
        std::vector<long long> next;
        next.reserve(b.divisors.size() * (e + 1));
        long long pk = 1;
        for (int i = 0; i <= e; ++i) {
            for (long long d : b.divisors) next.push_back(d * pk);
            if (i < e) pk *= p;
        }
        b.divisors = std::move(next);
    }
    return b;
}

inline DivisorBasis divisor_basis(long long n) { return divisor_basis(factorize(n)); }

inline long long phi(const FactoredInt& n) {
    long long r = n.value;
    for (const auto& [p, e] : n.factors) r = r / p * (p - 1);
    return r;
}

inline long long phi(long long n) { return phi(factorize(n)); }

inline long long rad(const FactoredInt& n) {
    long long r = 1;
    for (const auto& [p, e] : n.factors) r *= p;
    return r;
}

inline long long rad(long long n) { return rad(factorize(n)); }

inline long long num_divisors(const FactoredInt& n) {
    long long r = 1;
    for (const auto& [p, e] : n.factors) r *= e + 1;
    return r;
}

inline long long num_divisors(long long n) { return num_divisors(factorize(n)); }

inline int omega_count(const FactoredInt& n) { return static_cast<int>(n.factors.size()); }

inline int omega_count(long long n) { return omega_count(factorize(n)); }

// d exactly divides N: d | N and gcd(d, N/d) = 1.
inline bool exactly_divides(long long d, long long n) {
    if (d < 1 || n < 1 || n % d != 0)
        throw std::invalid_argument("exactly_divides requires a divisor");
    return std::gcd(d, n / d) == 1;
}

// Index of Gamma_0(N) in the modular group: N * prod_{p|N} (1 + 1/p).
inline long long psi(const FactoredInt& n) {
    long long r = n.value;
    for (const auto& [p, e] : n.factors) r = r / p * (p + 1);
    return r;
}

inline long long psi(long long n) { return psi(factorize(n)); }

// kappa(N) = phi(rad N) * prod_{p^n || N} ((n-1)(p-1) + 2); kappa(1) = 1.
inline long long kappa(const FactoredInt& n) {
    long long r = phi(factorize(rad(n)));
    for (const auto& [p, e] : n.factors) r *= (e - 1) * (p - 1) + 2;
    return r;
}

inline long long kappa(long long n) { return kappa(factorize(n)); }

}  // namespace etaforge
