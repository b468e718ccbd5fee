// The eta-quotient value type. An EtaQuotient is an integer exponent vector
// X over the divisors of an ambient modulus N, representing the product of
// eta(d z)^X_d over d | N. Orders at cusps are stored 24-scaled so that
// everything stays integral: scaled orders = A_N X.
#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "level.hpp"

namespace etaforge {

struct EtaQuotient {
    std::shared_ptr<const LevelData> data;   // ambient level bundle
    std::vector<long long> exponents;        // X, one entry per divisor slot

    EtaQuotient() : data(LevelData::get(1)), exponents(1, 0) {}
    EtaQuotient(std::shared_ptr<const LevelData> d, std::vector<long long> x)
        : data(std::move(d)), exponents(std::move(x)) {
        if (exponents.size() != data->dim)
            throw std::invalid_argument("exponent vector length must match the divisor count");
    }
    EtaQuotient(long long modulus, std::vector<long long> x)
        : EtaQuotient(LevelData::get(modulus), std::move(x)) {}

    long long modulus() const { return data->n; }
    bool is_constant() const {
        for (long long e : exponents)
            if (e != 0) return false;
        return true;
    }
    bool operator==(const EtaQuotient& o) const {
        return data->n == o.data->n && exponents == o.exponents;
    }
};

struct OrderVector {
    DivisorBasis basis;
    std::vector<Int> scaled_orders;   // 24 * (order at cusp 1/t), per basis slot
};

inline std::vector<Int> scaled_orders(const EtaQuotient& f) {
    std::vector<Int> x(f.exponents.begin(), f.exponents.end());
    return mul(f.data->order_mat, x);
}

inline OrderVector order_vector(const EtaQuotient& f) {
    return {f.data->basis, scaled_orders(f)};
}

inline bool is_holomorphic(const EtaQuotient& f) {
    for (const Int& v : scaled_orders(f))
        if (v < 0) return false;
    return true;
}

// k such that the weight is k/2.
inline long long weight_numerator(const EtaQuotient& f) {
    long long k = 0;
    for (long long e : f.exponents) k += e;
    return k;
}

// lcm of the support; the constant 1 has no level.
inline std::optional<long long> level(const EtaQuotient& f) {
    long long l = 0;
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0) {
            long long d = f.data->basis.divisors[i];
            l = l == 0 ? d : std::lcm(l, d);
        }
    if (l == 0) return std::nullopt;
    return l;
}

inline bool is_primitive(const EtaQuotient& f) {
    long long g = 0;
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0) g = std::gcd(g, f.data->basis.divisors[i]);
    if (g == 0) throw std::invalid_argument("the constant 1 is neither primitive nor imprimitive");
    return g == 1;
}

// Same quotient viewed on a coarser group: modulus m with modulus(f) | m.
inline EtaQuotient embed(const EtaQuotient& f, long long m) {
    if (m % f.modulus() != 0)
        throw std::invalid_argument("embed target must be a multiple of the modulus");
    if (m == f.modulus()) return f;
    auto data = LevelData::get(m);
    std::vector<long long> x(data->dim, 0);
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0)
            x[data->basis.index_of(f.data->basis.divisors[i])] = f.exponents[i];
    return EtaQuotient(std::move(data), std::move(x));
}

// f(z) -> f(nu z): exponent at nu*d = old exponent at d. Weight is
// preserved; the scaled order at infinity is multiplied by nu.
inline EtaQuotient rescale(const EtaQuotient& f, long long nu, long long new_modulus = 0) {
    if (nu < 1) throw std::invalid_argument("rescale factor must be positive");
    if (new_modulus == 0) new_modulus = nu * f.modulus();
    auto lvl = level(f);
    if (lvl && (new_modulus % (nu * *lvl)) != 0)
        throw std::invalid_argument("rescale target modulus must be divisible by nu * level");
    if (new_modulus % nu != 0 || new_modulus % f.modulus() != 0)
        throw std::invalid_argument("rescale target modulus is incompatible");
    auto data = LevelData::get(new_modulus);
    std::vector<long long> x(data->dim, 0);
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0)
            x[data->basis.index_of(nu * f.data->basis.divisors[i])] = f.exponents[i];
    return EtaQuotient(std::move(data), std::move(x));
}

// g divides f: f/g is holomorphic, after re-embedding both into the lcm of
// their moduli.
inline bool divides(const EtaQuotient& g, const EtaQuotient& f) {
    long long m = std::lcm(g.modulus(), f.modulus());
    EtaQuotient ge = embed(g, m), fe = embed(f, m);
    std::vector<long long> diff(ge.exponents.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = fe.exponents[i] - ge.exponents[i];
    return is_holomorphic(EtaQuotient(ge.data, std::move(diff)));
}

// F_N, the product of the distinguished generating family: exponent vector
// equals the row sums of B_N; scaled orders are exactly the m vector and the
// weight numerator is kappa(N).
inline EtaQuotient extremal_quotient(long long n) {
    auto data = LevelData::get(n);
    std::vector<long long> x(data->dim, 0);
    for (std::size_t i = 0; i < data->dim; ++i) {
        Int s = 0;
        for (std::size_t t = 0; t < data->dim; ++t) s += data->weight_mat.at(i, t);
        x[i] = to_ll(s);
    }
    return EtaQuotient(std::move(data), std::move(x));
}

// Sum over cusp classes of phi(gcd(t, N/t)) * scaled order must equal
// k * psi(N); holds for every eta quotient, holomorphic or not.
inline bool valence_check(const EtaQuotient& f) {
    std::vector<Int> x = scaled_orders(f);
    Int lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += x[i] * f.data->cusp_count[i];
    return lhs == Int(weight_numerator(f)) * f.data->index_psi;
}

// (divisor t, number of inequivalent cusps of denominator t).
inline std::vector<std::pair<long long, long long>> cusp_classes(long long n) {
    auto data = LevelData::get(n);
    std::vector<std::pair<long long, long long>> r;
    r.reserve(data->dim);
    for (std::size_t i = 0; i < data->dim; ++i)
        r.emplace_back(data->basis.divisors[i], data->cusp_count[i]);
    return r;
}

// Textual syntax: space-separated "divisor^exponent" terms, e.g. "1^2 2^-1".
// The constant 1 renders as "1^0". Zero-exponent terms parse and are dropped.
inline std::string format_eta(const EtaQuotient& f) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0) {
            if (any) out << ' ';
            out << f.data->basis.divisors[i] << '^' << f.exponents[i];
            any = true;
        }
    if (!any) return "1^0";
    return out.str();
}

// modulus = 0 infers the lcm of the mentioned divisors (1 for the constant).
inline EtaQuotient parse_eta(const std::string& text, long long modulus = 0) {
    std::istringstream in(text);
    std::vector<std::pair<long long, long long>> terms;
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
            throw std::invalid_argument("bad eta term '" + tok + "': want divisor^exponent");
        long long d, e;
        try {
            std::size_t used = 0;
            d = std::stoll(tok.substr(0, caret), &used);
            if (used != caret) throw std::invalid_argument("");
            std::string etext = tok.substr(caret + 1);
            e = std::stoll(etext, &used);
            if (used != etext.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad eta term '" + tok + "': want divisor^exponent");
        }
        if (d < 1) throw std::invalid_argument("divisor must be positive in '" + tok + "'");
        for (const auto& [pd, pe] : terms)
            if (pd == d) throw std::invalid_argument("duplicate divisor " + std::to_string(d));
        terms.emplace_back(d, e);
    }
    long long m = modulus;
    if (m == 0) {
        m = 1;
        for (const auto& [d, e] : terms)
            if (e != 0) m = std::lcm(m, d);
    }
    auto data = LevelData::get(m);
    std::vector<long long> x(data->dim, 0);
    for (const auto& [d, e] : terms) {
        if (e == 0) continue;   // zero-exponent terms are no-ops
        if (m % d != 0)
            throw std::invalid_argument("divisor " + std::to_string(d) +
                                        " does not divide the modulus " + std::to_string(m));
        x[data->basis.index_of(d)] = e;
    }
    return EtaQuotient(std::move(data), std::move(x));
}

inline nlohmann::ordered_json eta_to_json(const EtaQuotient& f) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i] != 0)
            exps[std::to_string(f.data->basis.divisors[i])] = f.exponents[i];
    return {{"modulus", f.modulus()}, {"exponents", std::move(exps)}};
}

inline EtaQuotient eta_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("exponents"))
        throw std::invalid_argument("eta JSON needs 'modulus' and 'exponents'");
    long long m = j.at("modulus").get<long long>();
    auto data = LevelData::get(m);
    std::vector<long long> x(data->dim, 0);
    for (auto& [key, val] : j.at("exponents").items()) {
        long long d = std::stoll(key);
        if (d < 1 || m % d != 0)
            throw std::invalid_argument("divisor " + key + " does not divide the modulus");
        x[data->basis.index_of(d)] = val.get<long long>();
    }
    return EtaQuotient(std::move(data), std::move(x));
}

}  // namespace etaforge
