// Dense exact matrices over the integers and rationals: products, Kronecker
// products, fraction-free (Bareiss) determinants, and plain-text rendering.
#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "arith.hpp"

namespace etaforge {

template <typename T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;  // row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> identity(std::size_t n) {
    Mat<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

template <typename T>
Mat<T> mul(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat<T> r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const T& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

template <typename T>
std::vector<T> mul(const Mat<T>& x, const std::vector<T>& v) {
    if (x.cols != v.size()) throw std::invalid_argument("matrix shape mismatch");
    std::vector<T> r(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
    return r;
}

// kronecker(X, Y) blocks by X: entry ((i*yr+k), (j*yc+l)) = X(i,j) * Y(k,l).
// Y is the inner (fast-varying) factor.
template <typename T>
Mat<T> kronecker(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> r(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const T& v = x.at(i, j);
            if (v == 0) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    r.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
        }
    return r;
}

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

// Fraction-free Gaussian elimination (Bareiss); exact integer determinant.
inline Int determinant(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    std::vector<Int> w = m.a;
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return w[i * n + j]; };
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

template <typename T>
std::string entry_string(const T& v) {
    if constexpr (std::is_same_v<T, Rat>) return rat_string(v);
    else return v.str();
}

// Right-aligned columns, one matrix row per line.
template <typename T>
std::string format_matrix(const Mat<T>& m) {
    std::vector<std::string> cells(m.a.size());
    std::vector<std::size_t> width(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            cells[i * m.cols + j] = entry_string(m.at(i, j));
            width[j] = std::max(width[j], cells[i * m.cols + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            const std::string& c = cells[i * m.cols + j];
            if (j) out << ' ';
            out << std::string(width[j] - c.size(), ' ') << c;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace etaforge
