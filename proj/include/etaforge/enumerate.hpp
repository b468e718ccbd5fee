// Complete enumerations. The workhorse is a lattice sweep: the scaled order
// vectors of eta quotients on a fixed level form the lattice spanned by the
// columns of the order matrix, so enumerating quotients of weight k/2 means
// walking the lattice points of a box slice { x >= 0, sum phi_t x_t = k psi }.
// The walk runs over the lower-triangular column Hermite form of the order
// matrix, which yields the points in lexicographically ascending order and
// admits knapsack-style pruning on the weight equation.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "eta.hpp"
#include "guards.hpp"
#include "level.hpp"

namespace etaforge {

namespace detail {

struct SweepContext {
    std::size_t dim;
    std::vector<std::vector<long long>> h;   // Hermite form, lower triangular
    std::vector<long long> phi;              // cusp-class sizes
    std::vector<long long> hi;               // inclusive coordinate bounds
    std::vector<long long> suffix_max;       // suffix_max[i] = sum_{j>=i} phi_j hi_j
    std::vector<std::vector<long long>> vstack;
    std::vector<long long> x;
    long long target = 0;
    int stride = 1, offset = 0;              // top-level candidate splitting
    const std::function<void(const std::vector<long long>&)>* visit = nullptr;

    void rec(std::size_t i, long long p) {
        if (i == dim) {
            if (p == target) (*visit)(x);
            return;
        }
        long long vi = vstack[i][i];
        long long hii = h[i][i];
        long long x0 = vi % hii;
        if (x0 < 0) x0 += hii;
        long long idx = 0;
        for (long long xi = x0; xi <= hi[i]; xi += hii, ++idx) {
            long long p2 = p + phi[i] * xi;
            if (p2 > target) break;
            if (i == 0 && stride > 1 && idx % stride != offset) continue;
            if (p2 + suffix_max[i + 1] < target) continue;
            long long c = (xi - vi) / hii;
            for (std::size_t j = i + 1; j < dim; ++j)
                vstack[i + 1][j] = vstack[i][j] + c * h[j][i];
            x[i] = xi;
            rec(i + 1, p2);
        }
    }
};

}  // namespace detail

// Visit every lattice point x of the order lattice with 0 <= x <= hi and
// sum phi_t x_t = target, in lexicographically ascending order. stride/offset
// split the top-coordinate candidates round-robin for parallel runs.
inline void sweep_weight_slice(const LevelData& ld, const std::vector<long long>& hi,
                               long long target,
                               const std::function<void(const std::vector<long long>&)>& visit,
                               int stride = 1, int offset = 0) {
    detail::SweepContext ctx;
    ctx.dim = ld.dim;
    ctx.h.assign(ld.dim, std::vector<long long>(ld.dim, 0));
    for (std::size_t i = 0; i < ld.dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) ctx.h[i][j] = to_ll(ld.lattice_hermite.at(i, j));
    ctx.phi = ld.cusp_count;
    ctx.hi = hi;
    ctx.suffix_max.assign(ld.dim + 1, 0);
    for (std::size_t i = ld.dim; i-- > 0;)
        ctx.suffix_max[i] = ctx.suffix_max[i + 1] + ctx.phi[i] * hi[i];
    ctx.vstack.assign(ld.dim + 1, std::vector<long long>(ld.dim, 0));
    ctx.x.assign(ld.dim, 0);
    ctx.target = target;
    ctx.stride = stride;
    ctx.offset = offset;
    ctx.visit = &visit;
    if (target >= 0) ctx.rec(0, 0);
}

// Exponent vector X with (order matrix) * X = x; exact, and by construction
// of the sweep always integral.
inline std::vector<long long> exponent_preimage(const LevelData& ld,
                                                const std::vector<long long>& x) {
    std::vector<long long> ex(ld.dim);
    for (std::size_t i = 0; i < ld.dim; ++i) {
        Rat v = 0;
        for (std::size_t j = 0; j < ld.dim; ++j)
            if (x[j] != 0) v += ld.order_inv.at(i, j) * x[j];
        if (!is_integer(v))
            throw std::logic_error("lattice point has a non-integral exponent preimage");
        ex[i] = to_ll(rat_num(v));
    }
    return ex;
}

// Stream the holomorphic eta quotients of weight k/2 on the given level, in
// lexicographically ascending scaled-order order.
inline void enumerate_by_weight_stream(long long n, long long k,
                                       const std::function<void(EtaQuotient)>& visit) {
    if (k < 0) throw std::invalid_argument("weight numerator must be nonnegative");
    require_divisor_guard(n);
    require_weight_guard(k);
    auto ld = LevelData::get(n);
    long long target = k * ld->index_psi;
    std::vector<long long> hi(ld->dim);
    for (std::size_t i = 0; i < ld->dim; ++i) hi[i] = target / ld->cusp_count[i];
    sweep_weight_slice(*ld, hi, target, [&](const std::vector<long long>& x) {
        EtaQuotient f(ld, exponent_preimage(*ld, x));
        if (weight_numerator(f) != k)
            throw std::logic_error("weight disagrees with the valence identity");
        visit(std::move(f));
    });
}

inline std::vector<EtaQuotient> enumerate_by_weight(long long n, long long k) {
    std::vector<EtaQuotient> out;
    enumerate_by_weight_stream(n, k, [&](EtaQuotient f) { out.push_back(std::move(f)); });
    return out;
}

// Stream the det(B_N) exponent vectors X with B^{-1} X in [0,1)^D: Smith
// residue representatives of Z^D modulo the column lattice of B, each reduced
// into the fundamental parallelepiped with exact integer floors.
inline void parallelepiped_stream(long long n,
                                  const std::function<void(const std::vector<long long>&)>& visit) {
    if (n < 2) throw std::invalid_argument("parallelepiped_points needs a level >= 2");
    require_divisor_guard(n);
    require_volume_guard(n);
    auto ld = LevelData::get(n);
    std::size_t dim = ld->dim;
    SmithForm sf = smith_form(ld->weight_mat);
    std::vector<long long> s(dim);
    Int prod = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        s[i] = to_ll(sf.s.at(i, i));
        prod *= s[i];
    }
    if (prod != ld->det_weight)
        throw std::logic_error("Smith diagonal does not multiply to the determinant");

    const IntMat& adj = ld->weight_adj;
    const Int& det = ld->det_weight;
    std::vector<Int> c(dim, 0);       // current representative, Uinv * r
    std::vector<long long> r(dim, 0); // odometer over prod [0, s_i)
    std::vector<Int> w(dim), q(dim);
    std::vector<long long> out(dim);
    for (;;) {
        // Reduce c into the parallelepiped: X = c - B * floor(adj c / det).
        for (std::size_t i = 0; i < dim; ++i) {
            w[i] = 0;
            for (std::size_t j = 0; j < dim; ++j)
                if (c[j] != 0) w[i] += adj.at(i, j) * c[j];
            q[i] = floor_div(w[i], det);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            Int v = c[i];
            for (std::size_t j = 0; j < dim; ++j)
                if (q[j] != 0) v -= ld->weight_mat.at(i, j) * q[j];
            out[i] = to_ll(v);
        }
        visit(out);
        // Odometer step; digit i stepping adds column i of Uinv to c.
        std::size_t i = 0;
        while (i < dim && r[i] == s[i] - 1) {
            for (std::size_t j = 0; j < dim; ++j) c[j] -= Int(s[i] - 1) * sf.uinv.at(j, i);
            r[i++] = 0;
        }
        if (i == dim) break;
        ++r[i];
        for (std::size_t j = 0; j < dim; ++j) c[j] += sf.uinv.at(j, i);
    }
}

inline std::vector<std::vector<long long>> parallelepiped_points(long long n) {
    std::vector<std::vector<long long>> out;
    parallelepiped_stream(n, [&](const std::vector<long long>& x) { out.push_back(x); });
    return out;
}

// Membership test for the same region, usable on arbitrary vectors.
inline bool in_parallelepiped(const LevelData& ld, const std::vector<long long>& ex) {
    for (std::size_t i = 0; i < ld.dim; ++i) {
        Int w = 0;
        for (std::size_t j = 0; j < ld.dim; ++j)
            if (ex[j] != 0) w += ld.weight_adj.at(i, j) * ex[j];
        if (w < 0 || w >= ld.det_weight) return false;
    }
    return true;
}

// Parallelepiped points with nonnegative coordinates not on the unit sphere
// (coordinate square sum != 1); at least the Omega'' bound, which is asserted.
inline long long nonneg_offsphere_count(long long n) {
    long long count = 0;
    parallelepiped_stream(n, [&](const std::vector<long long>& x) {
        long long sq = 0;
        for (long long v : x) {
            if (v < 0) return;
            sq += v * v;
        }
        if (sq != 1) ++count;
    });
    if (Rat(count) < omega_dprime_bound(n))
        throw std::logic_error("off-sphere count fell below its lower bound");
    return count;
}

// #{ t | N : rad(N) does not divide gcd(t, N/t) }. The count is always taken
// by enumeration. The pair-truncated closed form
//   2 sum d(N/p^n) - 2^omega (omega - 1)
// is an identity exactly when omega(N) <= 2 or N is squarefree (expanding
// both sides in the exponents shows the higher inclusion-exclusion terms are
// dropped); the first counterexample is N = 60 (true count 12, formula 16).
// Within its range of validity the closed form is cross-checked.
inline long long count_rad_nondividing_divisors(long long n) {
    if (n < 2) throw std::invalid_argument("count_rad_nondividing_divisors needs n >= 2");
    FactoredInt f = factorize(n);
    long long r = rad(f);
    long long brute = 0;
    for (long long t : divisor_basis(f).divisors)
        if (std::gcd(t, n / t) % r != 0) ++brute;
    int om = omega_count(f);
    if (om <= 2 || r == n) {
        long long closed = 0;
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            closed += 2 * cofactor_divisor_count(f, i);
        closed -= to_ll(int_pow(Int(2), om)) * (om - 1);
        if (closed != brute)
            throw std::logic_error("divisor-count closed form disagrees with enumeration");
    }
    return brute;
}

// Lattice points of the simplex conv(0, columns of C_N): nonnegative X with
// sum X_i / C_ii <= 1. Count is at least det(C)/d! (volume bound), asserted.
inline std::vector<std::vector<long long>> simplex_points(long long n) {
    if (n < 2) throw std::invalid_argument("simplex_points needs a level >= 2");
    auto ld = LevelData::get(n);
    if (ld->dim > 6)
        throw GuardViolation("simplex_points supports at most 6 divisors; level " +
                             std::to_string(n) + " has " + std::to_string(ld->dim));
    std::size_t dim = ld->dim;
    std::vector<long long> c(dim);
    Int detc = 1;
    long long l = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        c[i] = to_ll(ld->cusp_simplex.at(i, i));
        detc *= c[i];
        l = std::lcm(l, c[i]);
    }
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(dim, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long budget) {
        if (i == dim) {
            out.push_back(x);
            return;
        }
        long long unit = l / c[i];
        for (long long v = 0; v * unit <= budget; ++v) {
            x[i] = v;
            rec(i + 1, budget - v * unit);
        }
        x[i] = 0;
    };
    rec(0, l);
    if (Rat(Int(out.size())) < Rat(detc, factorial(dim)))
        throw std::logic_error("simplex point count fell below the volume bound");
    return out;
}

}  // namespace etaforge
