// Exact arithmetic aliases and small helpers shared by every module.
#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace etaforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor toward negative infinity; C++ integer division truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline long long to_ll(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

inline Int int_pow(Int base, unsigned long long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// "a/b", or just "a" when the denominator is 1.
inline std::string rat_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int factorial(unsigned long long n) {
    Int r = 1;
    for (unsigned long long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace etaforge
