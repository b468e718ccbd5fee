// Integer matrix normal forms: Smith form with both transforms tracked, and
// the lower-triangular column Hermite form used for lattice enumeration.
#pragma once

#include <cstdlib>
#include <stdexcept>

#include "matrix.hpp"

namespace etaforge {

// u * m * v = s with u, v unimodular, s diagonal, s(0,0) | s(1,1) | ...,
// diagonal entries nonnegative. uinv is maintained alongside u so callers can
// map residue representatives back without a matrix inversion.
struct SmithForm {
    IntMat s, u, uinv, v;
};

inline SmithForm smith_form(const IntMat& m) {
    std::size_t nr = m.rows, nc = m.cols;
    SmithForm f{m, identity<Int>(nr), identity<Int>(nr), identity<Int>(nc)};
    IntMat& s = f.s;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (std::size_t j = 0; j < nr; ++j) {
            std::swap(f.u.at(a, j), f.u.at(b, j));
            std::swap(f.uinv.at(j, a), f.uinv.at(j, b));
        }
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < nr; ++i) std::swap(s.at(i, a), s.at(i, b));
        for (std::size_t i = 0; i < nc; ++i) std::swap(f.v.at(i, a), f.v.at(i, b));
    };
    // row a += q * row b
    auto add_row = [&](std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < nc; ++j) s.at(a, j) += q * s.at(b, j);
        for (std::size_t j = 0; j < nr; ++j) f.u.at(a, j) += q * f.u.at(b, j);
        for (std::size_t i = 0; i < nr; ++i) f.uinv.at(i, b) -= q * f.uinv.at(i, a);
    };
    // col a += q * col b
    auto add_col = [&](std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < nr; ++i) s.at(i, a) += q * s.at(i, b);
        for (std::size_t i = 0; i < nc; ++i) f.v.at(i, a) += q * f.v.at(i, b);
    };
    auto negate_row = [&](std::size_t a) {
        for (std::size_t j = 0; j < nc; ++j) s.at(a, j) = -s.at(a, j);
        for (std::size_t j = 0; j < nr; ++j) f.u.at(a, j) = -f.u.at(a, j);
        for (std::size_t i = 0; i < nr; ++i) f.uinv.at(i, a) = -f.uinv.at(i, a);
    };

    std::size_t dim = std::min(nr, nc);
    for (std::size_t k = 0; k < dim; ++k) {
        for (;;) {
            // Move the smallest-magnitude nonzero of the trailing block to (k,k).
            std::size_t pi = nr, pj = nc;
            for (std::size_t i = k; i < nr; ++i)
                for (std::size_t j = k; j < nc; ++j)
                    if (s.at(i, j) != 0 &&
                        (pi == nr || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == nr) goto next_k;  // trailing block is zero
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool clear = true;
            for (std::size_t i = k + 1; i < nr; ++i)
                if (s.at(i, k) != 0) {
                    add_row(i, k, -(s.at(i, k) / s.at(k, k)));
                    if (s.at(i, k) != 0) clear = false;
                }
            for (std::size_t j = k + 1; j < nc; ++j)
                if (s.at(k, j) != 0) {
                    add_col(j, k, -(s.at(k, j) / s.at(k, k)));
                    if (s.at(k, j) != 0) clear = false;
                }
            if (!clear) continue;

            // Enforce the divisibility chain before moving on.
            bool retry = false;
            for (std::size_t i = k + 1; i < nr && !retry; ++i)
                for (std::size_t j = k + 1; j < nc && !retry; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        add_row(k, i, 1);
                        retry = true;
                    }
            if (!retry) break;
        }
        if (s.at(k, k) < 0) negate_row(k);
    next_k:;
    }
    return f;
}

// Lower-triangular column Hermite form of a nonsingular square matrix:
// h = m * w for unimodular w, h(i,i) > 0, and 0 <= h(i,j) < h(i,i) for j < i.
// Column j of h is the lexicographically minimal positive lattice direction
// whose first nonzero coordinate sits at row j.
inline IntMat hermite_columns(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("hermite_columns needs a square matrix");
    std::size_t n = m.rows;
    IntMat h = m;
    auto sub_col = [&](std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) h.at(i, a) -= q * h.at(i, b);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = i; j < n; ++j)
                if (h.at(i, j) != 0 && (best == n || abs(h.at(i, j)) < abs(h.at(i, best))))
                    best = j;
            if (best == n) throw std::invalid_argument("hermite_columns: singular matrix");
            if (best != i)
                for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, best));
            bool clear = true;
            for (std::size_t j = i + 1; j < n; ++j)
                if (h.at(i, j) != 0) {
                    sub_col(j, i, h.at(i, j) / h.at(i, i));
                    if (h.at(i, j) != 0) clear = false;
                }
            if (clear) break;
        }
        if (h.at(i, i) < 0)
            for (std::size_t r = 0; r < n; ++r) h.at(r, i) = -h.at(r, i);
        for (std::size_t j = 0; j < i; ++j) {
            Int q = floor_div(h.at(i, j), h.at(i, i));
            if (q != 0) sub_col(j, i, q);
        }
    }
    return h;
}

}  // namespace etaforge
