// Cost guards. Enumeration-grade operations refuse levels whose divisor
// count, lattice volume (det B_N), or requested weight exceed configurable
// limits; exceeding a guard throws, it never silently truncates.
#pragma once

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bounds.hpp"
#include "numtheory.hpp"

namespace etaforge {

struct GuardLimits {
    long long max_divisors = 16;         // d(N) cap for enumeration work
    long long max_det = 10'000'000;      // det(B_N) cap for volume-priced work
    long long max_weight = 64;           // weight-numerator cap
};

class GuardViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline GuardLimits& guard_limits() {
    static GuardLimits g;
    return g;
}

// Load limits from a JSON object file, e.g. {"max_divisors": 16,
// "max_det": 10000000, "max_weight": 64}; absent keys keep their values.
inline void load_guard_config(const std::string& path, bool required) {
    std::ifstream in(path);
    if (!in) {
        if (required) throw ConfigError("cannot open guard config: " + path);
        return;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("invalid guard config " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("guard config must be a JSON object: " + path);
    GuardLimits& g = guard_limits();
    for (auto& [key, val] : j.items()) {
        if (!val.is_number_integer() || val.get<long long>() < 1)
            throw ConfigError("guard config key '" + key + "' must be a positive integer");
        if (key == "max_divisors") g.max_divisors = val.get<long long>();
        else if (key == "max_det") g.max_det = val.get<long long>();
        else if (key == "max_weight") g.max_weight = val.get<long long>();
        else throw ConfigError("unknown guard config key '" + key + "'");
    }
}

// Reads the optional config file; ETAFORGE_GUARDS overrides its path (and
// makes the file mandatory, since the caller asked for it by name).
inline void init_guards_from_environment() {
    const char* env = std::getenv("ETAFORGE_GUARDS");
    if (env && *env) load_guard_config(env, true);
    else load_guard_config("etaforge-guards.json", false);
}

inline void require_divisor_guard(long long n, long long limit_override = 0) {
    long long limit = limit_override > 0 ? limit_override : guard_limits().max_divisors;
    long long d = num_divisors(n);
    if (d > limit)
        throw GuardViolation("level " + std::to_string(n) + " has " + std::to_string(d) +
                             " divisors, exceeding the limit " + std::to_string(limit));
}

inline void require_volume_guard(long long n) {
    Int det = omega_prime_bound(n);
    if (det > guard_limits().max_det)
        throw GuardViolation("level " + std::to_string(n) + " has lattice volume " + det.str() +
                             ", exceeding the limit " + std::to_string(guard_limits().max_det));
}

inline void require_weight_guard(long long k) {
    if (k > guard_limits().max_weight)
        throw GuardViolation("weight numerator " + std::to_string(k) +
                             " exceeds the limit " + std::to_string(guard_limits().max_weight));
}

}  // namespace etaforge
