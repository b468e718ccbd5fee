// Independent reference implementations used to validate the library.
// Everything here is deliberately naive and self-contained: own gcd, own
// trial-division factorization, rational Gauss-Jordan inversion, and
// enumerate-then-filter searches. Nothing includes library headers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<long long>;

inline long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline std::vector<std::pair<long long, int>> factor(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline long long phi(long long n) {
    long long r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

inline long long psi(long long n) {
    long long r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p + 1);
    return r;
}

// Divisors of N ordered lexicographically by prime-exponent vector with the
// smallest prime's exponent varying fastest.
inline Vec divisor_basis(long long n) {
    Vec divs = {1};
    for (auto [p, e] : factor(n)) {
        Vec next;
        long long pk = 1;
        for (int i = 0; i <= e; ++i) {
            for (long long d : divs) next.push_back(d * pk);
            if (i < e) pk *= p;
        }
        divs = next;
    }
    return divs;
}

// 24-scaled order of eta(d z) at the cusp 1/t of Gamma_0(N).
inline long long order_entry(long long n, long long t, long long d) {
    long long g = gcd_ll(d, t);
    long long g2 = gcd_ll(t * t, n);
    long long num = n * g * g;
    long long den = d * g2;
    if (num % den != 0) throw std::runtime_error("order entry not integral");
    return num / den;
}

inline std::vector<Vec> order_matrix(long long n) {
    Vec basis = divisor_basis(n);
    std::vector<Vec> a(basis.size(), Vec(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            a[i][j] = order_entry(n, basis[i], basis[j]);
    return a;
}

// Gauss-Jordan inverse over exact rationals. Throws on singular input.
inline std::vector<std::vector<Rat>> gauss_inverse(const std::vector<Vec>& m) {
    size_t dim = m.size();
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(2 * dim, 0));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) a[i][j] = m[i][j];
        a[i][dim + i] = 1;
    }
    for (size_t c = 0; c < dim; ++c) {
        size_t piv = c;
        while (piv < dim && a[piv][c] == 0) ++piv;
        if (piv == dim) throw std::runtime_error("singular matrix");
        std::swap(a[c], a[piv]);
        Rat inv = Rat(1) / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (size_t r = 0; r < dim; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (size_t j = 0; j < 2 * dim; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rat>> out(dim, std::vector<Rat>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) out[i][j] = a[i][dim + j];
    return out;
}

// Exponent vectors X with A_N X >= 0 and sum(X) = k, found by scanning the
// whole box [-bound, bound]^D. Exponential in D; call only at desk scale.
inline std::set<Vec> enumerate_box(long long n, long long k, long long bound) {
    Vec basis = divisor_basis(n);
    auto a = order_matrix(n);
    size_t dim = basis.size();
    std::set<Vec> out;
    Vec x(dim, -bound);
    while (true) {
        long long sum = 0;
        for (auto v : x) sum += v;
        if (sum == k) {
            bool holo = true;
            for (size_t i = 0; i < dim && holo; ++i) {
                long long o = 0;
                for (size_t j = 0; j < dim; ++j) o += a[i][j] * x[j];
                holo = o >= 0;
            }
            if (holo) out.insert(x);
        }
        size_t i = 0;
        while (i < dim && x[i] == bound) x[i++] = -bound;
        if (i == dim) break;
        ++x[i];
    }
    return out;
}

// Weight-k holomorphic quotients found the slow way: enumerate every
// nonnegative solution of sum(phi_t x_t) = k psi(N) over scaled-order
// vectors, keep those with integral preimage under A_N.
inline std::set<Vec> enumerate_orderspace(long long n, long long k) {
    Vec basis = divisor_basis(n);
    size_t dim = basis.size();
    Vec mult(dim);
    for (size_t i = 0; i < dim; ++i) mult[i] = phi(gcd_ll(basis[i], n / basis[i]));
    auto ainv = gauss_inverse(order_matrix(n));
    long long target = k * psi(n);
    std::set<Vec> out;
    Vec x(dim, 0);
    std::function<void(size_t, long long)> rec = [&](size_t idx, long long rem) {
        if (idx + 1 == dim) {
            if (rem % mult[idx] != 0) return;
            x[idx] = rem / mult[idx];
            Vec ex(dim);
            for (size_t i = 0; i < dim; ++i) {
                Rat v = 0;
                for (size_t j = 0; j < dim; ++j) v += ainv[i][j] * x[j];
                if (boost::multiprecision::denominator(v) != 1) return;
                ex[i] = static_cast<long long>(boost::multiprecision::numerator(v));
            }
            out.insert(ex);
            return;
        }
        for (long long v = 0; v * mult[idx] <= rem; ++v) {
            x[idx] = v;
            rec(idx + 1, rem - v * mult[idx]);
        }
        x[idx] = 0;
    };
    if (dim == 1) {
        if (target % mult[0] == 0) out.insert(Vec{target / mult[0]});
    } else {
        rec(0, target);
    }
    return out;
}

inline long long kappa(long long n) {
    long long r = 1;
    long long rad = 1;
    for (auto [p, e] : factor(n)) {
        rad *= p;
        r *= (e - 1) * (p - 1) + 2;
    }
    return phi(rad) * r;
}

// Complete non-factorizable census by filtering every holomorphic quotient of
// weight below kappa(N): f is factorizable iff some lighter holomorphic g
// divides it nontrivially. Desk scale only.
inline std::set<Vec> census_bruteforce(long long n) {
    long long kap = kappa(n);
    auto a = order_matrix(n);
    size_t dim = a.size();
    auto orders = [&](const Vec& x) {
        Vec o(dim, 0);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) o[i] += a[i][j] * x[j];
        return o;
    };
    std::vector<std::pair<Vec, Vec>> all;  // (exponents, orders), weights 1..kappa-1
    std::vector<size_t> weight_start = {0};
    for (long long k = 1; k < kap; ++k) {
        for (const Vec& x : enumerate_orderspace(n, k)) all.push_back({x, orders(x)});
        weight_start.push_back(all.size());
    }
    std::set<Vec> out;
    for (long long k = 1; k < kap; ++k) {
        for (size_t i = weight_start[k - 1]; i < weight_start[k]; ++i) {
            const auto& [x, ox] = all[i];
            bool factorizable = false;
            // Candidate divisors have weight < k, hence index < weight_start[k-1].
            for (size_t j = 0; j < weight_start[k - 1] && !factorizable; ++j) {
                const auto& og = all[j].second;
                bool leq = true;
                for (size_t c = 0; c < dim && leq; ++c) leq = og[c] <= ox[c];
                factorizable = leq;
            }
            if (!factorizable) out.insert(x);
        }
    }
    return out;
}

}  // namespace oracle
