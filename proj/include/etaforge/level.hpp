// Per-level linear algebra. For a level N with divisors t, d:
//
//   order_matrix A:  A(t,d) = N gcd(d,t)^2 / (d gcd(t^2, N)), the scaled
//                    vanishing order of the d-th eta factor at a cusp of
//                    denominator t. Kronecker product of prime-power blocks
//                    in the divisor-basis ordering.
//   denominator_clearer m:  the diagonal of A*B; multiplying scaled orders
//                    by the basis change B clears all denominators of A^{-1}.
//   b_matrix B:      A*B = diag(m); columns of B are the scaled order vectors
//                    of a distinguished generating family of eta quotients.
//   c_matrix C:      diagonal matrix whose simplex conv(0, columns) contains
//                    all scaled order vectors of holomorphic weight-1/2
//                    quotients.
//
// All are Kronecker products over p^n || N; the smallest prime is the
// innermost (fastest-varying) factor, matching the divisor basis.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "numtheory.hpp"
#include "snf.hpp"

namespace etaforge {

inline IntMat order_matrix_prime_power(long long p, int n) {
    IntMat a(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            int e = n + 2 * std::min(i, j) - j - std::min(2 * i, n);
            a.at(i, j) = int_pow(Int(p), e);
        }
    return a;
}

inline IntMat order_matrix(const FactoredInt& n) {
    IntMat acc = identity<Int>(1);
    for (const auto& [p, e] : n.factors) acc = kronecker(order_matrix_prime_power(p, e), acc);
    return acc;
}

inline IntMat order_matrix(long long n) { return order_matrix(factorize(n)); }

// Closed form for the inverse of a prime-power block: with c = p^n (p - 1/p),
//   c * Ainv(i,j) = p                         if i = j in {0, n}
//                 = p^min(j-1, n-j-1) (p^2+1)  if 0 < i = j < n
//                 = -p^min(j, n-j)             if |i - j| = 1
//                 = 0                          otherwise.
inline RatMat order_matrix_inverse_prime_power(long long p, int n) {
    RatMat a(n + 1, n + 1);
    Rat scale = Rat(p) / (int_pow(Int(p), n) * (Int(p) * p - 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Int v = 0;
            if (i == j && (i == 0 || i == n)) v = p;
            else if (i == j) v = int_pow(Int(p), std::min(j - 1, n - j - 1)) * (Int(p) * p + 1);
            else if (i - j == 1 || j - i == 1) v = -int_pow(Int(p), std::min(j, n - j));
            a.at(i, j) = v * scale;
        }
    return a;
}

inline RatMat order_matrix_inverse(const FactoredInt& n) {
    RatMat acc = identity<Rat>(1);
    for (const auto& [p, e] : n.factors)
        acc = kronecker(order_matrix_inverse_prime_power(p, e), acc);
    return acc;
}

inline RatMat order_matrix_inverse(long long n) { return order_matrix_inverse(factorize(n)); }

// m_t for t = p^j, p^n || N:  p^(n-1) (p^2-1) at the ends j in {0, n},
// p^(n - min(j, n-j)) (p^2-1) in between; multiplicative across prime powers.
inline std::vector<Int> denominator_clearer(const FactoredInt& n) {
    std::vector<Int> m = {1};
    for (const auto& [p, e] : n.factors) {
        std::vector<Int> block(e + 1);
        for (int j = 0; j <= e; ++j) {
            int drop = (j == 0 || j == e) ? 1 : std::min(j, e - j);
            block[j] = int_pow(Int(p), e - drop) * (Int(p) * p - 1);
        }
        std::vector<Int> next;
        next.reserve(m.size() * block.size());
        for (const Int& b : block)
            for (const Int& v : m) next.push_back(v * b);
        m = std::move(next);
    }
    return m;
}

inline std::vector<Int> denominator_clearer(long long n) {
    return denominator_clearer(factorize(n));
}

inline IntMat b_matrix_prime_power(long long p, int n) {
    IntMat b(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        if (j == 0) {
            b.at(0, 0) = p;
            b.at(1, 0) = -1;
        } else if (j == n) {
            b.at(n - 1, n) = -1;
            b.at(n, n) = p;
        } else {
            b.at(j - 1, j) = -p;
            b.at(j, j) = Int(p) * p + 1;
            b.at(j + 1, j) = -p;
        }
    }
    return b;
}

inline IntMat b_matrix(const FactoredInt& n) {
    IntMat acc = identity<Int>(1);
    for (const auto& [p, e] : n.factors) acc = kronecker(b_matrix_prime_power(p, e), acc);
    return acc;
}

inline IntMat b_matrix(long long n) { return b_matrix(factorize(n)); }

// B^{-1} = diag(1/m) * A, block by block.
inline RatMat b_inverse_prime_power(long long p, int n) {
    IntMat a = order_matrix_prime_power(p, n);
    FactoredInt f;
    f.value = to_ll(int_pow(Int(p), n));
    f.factors = {{p, n}};
    std::vector<Int> m = denominator_clearer(f);
    RatMat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = Rat(a.at(i, j), m[i]);
    return r;
}

inline RatMat b_inverse(const FactoredInt& n) {
    RatMat acc = identity<Rat>(1);
    for (const auto& [p, e] : n.factors) acc = kronecker(b_inverse_prime_power(p, e), acc);
    return acc;
}

inline RatMat b_inverse(long long n) { return b_inverse(factorize(n)); }

inline IntMat c_matrix(const FactoredInt& n) {
    IntMat acc = identity<Int>(1);
    for (const auto& [p, e] : n.factors) {
        IntMat block(e + 1, e + 1);
        for (int j = 0; j <= e; ++j)
            block.at(j, j) = (j == 0 || j == e) ? Int(p - 1) : Int(p) * p - 1;
        acc = kronecker(block, acc);
    }
    return acc;
}

inline IntMat c_matrix(long long n) { return c_matrix(factorize(n)); }

// Everything a level computation needs, built once and shared.
struct LevelData {
    long long n = 1;
    FactoredInt fac;
    DivisorBasis basis;
    std::size_t dim = 1;
    IntMat order_mat;                    // A
    RatMat order_inv;                    // A^{-1}
    std::vector<Int> clear_denoms;       // m
    IntMat weight_mat;                   // B
    RatMat weight_inv;                   // B^{-1}
    IntMat cusp_simplex;                 // C
    std::vector<long long> cusp_count;   // phi(gcd(t, n/t)) per basis slot
    long long index_psi = 1;             // psi(n)
    long long kappa_n = 1;               // kappa(n)
    Int det_weight = 1;                  // det B
    IntMat weight_adj;                   // det B * B^{-1}, integral
    IntMat lattice_hermite;              // column Hermite form of A

    static std::shared_ptr<const LevelData> get(long long n);
};

inline std::shared_ptr<const LevelData> LevelData::get(long long n) {
    if (n < 1) throw std::invalid_argument("level must be a positive integer");
    static std::mutex mu;
    static std::map<long long, std::shared_ptr<const LevelData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto d = std::make_shared<LevelData>();
    d->n = n;
    d->fac = factorize(n);
    d->basis = divisor_basis(d->fac);
    d->dim = d->basis.size();
    d->order_mat = order_matrix(d->fac);
    d->order_inv = order_matrix_inverse(d->fac);
    d->clear_denoms = denominator_clearer(d->fac);
    d->weight_mat = b_matrix(d->fac);
    d->weight_inv = b_inverse(d->fac);
    d->cusp_simplex = c_matrix(d->fac);
    d->cusp_count.resize(d->dim);
    for (std::size_t i = 0; i < d->dim; ++i) {
        long long t = d->basis.divisors[i];
        d->cusp_count[i] = phi(std::gcd(t, n / t));
    }
    d->index_psi = psi(d->fac);
    d->kappa_n = kappa(d->fac);
    d->det_weight = 1;
    for (std::size_t i = 0; i < d->fac.factors.size(); ++i) {
        const auto& [p, e] = d->fac.factors[i];
        Int block = int_pow(Int(p), 2 * (e - 1)) * (Int(p) * p - 1);
        long long cnt = 1;
        for (std::size_t j = 0; j < d->fac.factors.size(); ++j)
            if (j != i) cnt *= d->fac.factors[j].e + 1;
        d->det_weight *= int_pow(block, cnt);
    }
    d->weight_adj = IntMat(d->dim, d->dim);
    for (std::size_t i = 0; i < d->dim; ++i)
        for (std::size_t j = 0; j < d->dim; ++j) {
            Rat v = d->weight_inv.at(i, j) * d->det_weight;
            if (!is_integer(v)) throw std::logic_error("adjugate entry not integral");
            d->weight_adj.at(i, j) = rat_num(v);
        }
    d->lattice_hermite = hermite_columns(d->order_mat);

    cache.emplace(n, d);
    return d;
}

}  // namespace etaforge
