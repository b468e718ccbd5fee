#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "etaforge/factor.hpp"

#include "expected_values.hpp"
#include "oracles.hpp"

using namespace etaforge;

namespace {

std::set<std::vector<long long>> census_exponents(const std::vector<CensusEntry>& v) {
    std::set<std::vector<long long>> s;
    for (const auto& e : v) s.insert(e.quotient.exponents);
    return s;
}

}  // namespace

TEST_CASE("witness search on the full modular group") {
    EtaQuotient delta(1, {24});
    auto w = factorizable_on(delta, 1);
    REQUIRE(w.has_value());
    CHECK(w->left == EtaQuotient(1, {1}));     // lex-least part: eta itself
    CHECK(w->right == EtaQuotient(1, {23}));

    CHECK_FALSE(factorizable_on(EtaQuotient(1, {1}), 1).has_value());
    CHECK_FALSE(factorizable_on(EtaQuotient(1, {1}), 6).has_value());
}

TEST_CASE("witness search on wider groups") {
    EtaQuotient delta(1, {24});
    auto w2 = factorizable_on(delta, 2);
    REQUIRE(w2.has_value());
    CHECK(w2->left.exponents == std::vector<long long>{-1, 2});    // eta(2z)^2/eta(z)
    CHECK(w2->right.exponents == std::vector<long long>{25, -2});
    CHECK(is_holomorphic(w2->left));
    CHECK(is_holomorphic(w2->right));

    auto w4 = factorizable_on(delta, 4);
    REQUIRE(w4.has_value());
    CHECK(w4->left.exponents == std::vector<long long>{0, -1, 2});  // eta(4z)^2/eta(2z)
    CHECK(w4->right.exponents == std::vector<long long>{24, 1, -2});

    // Weight 1/2 never splits: both parts would need positive weight.
    CHECK_FALSE(factorizable_on(EtaQuotient(2, {2, -1}), 2).has_value());
    CHECK_FALSE(factorizable_on(EtaQuotient(2, {-1, 2}), 8).has_value());

    // eta(z) eta(2z) splits into the two weight-1/2 level-2 quotients.
    auto wp = factorizable_on(EtaQuotient(2, {1, 1}), 2);
    REQUIRE(wp.has_value());
    CHECK(wp->left.exponents == std::vector<long long>{-1, 2});
    CHECK(wp->right.exponents == std::vector<long long>{2, -1});
}

TEST_CASE("witness search rejects bad inputs") {
    CHECK_THROWS_AS(factorizable_on(EtaQuotient(), 1), std::invalid_argument);
    CHECK_THROWS_AS(factorizable_on(EtaQuotient(2, {0, 1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(factorizable_on(EtaQuotient(2, {1, -1}), 2), std::invalid_argument);
}

TEST_CASE("witness validation catches malformed splits") {
    EtaQuotient f(2, {1, 1});
    CHECK_THROWS_AS(validate_witness({EtaQuotient(), f}, f, 2), std::logic_error);
    CHECK_THROWS_AS(
        validate_witness({EtaQuotient(2, {1, 0}), EtaQuotient(2, {1, 0})}, f, 2),
        std::logic_error);
    CHECK_THROWS_AS(
        validate_witness({EtaQuotient(2, {1, -1}), EtaQuotient(2, {0, 2})}, f, 2),
        std::logic_error);
}

TEST_CASE("restriction to the exact level") {
    EtaQuotient f(8, {-1, 2, 0, 0});
    EtaQuotient r = restrict_to_level(f);
    CHECK(r.modulus() == 2);
    CHECK(r.exponents == std::vector<long long>{-1, 2});
    CHECK(restrict_to_level(EtaQuotient()).modulus() == 1);
    CHECK(scaled_orders_ll(EtaQuotient(2, {24, 0})) == std::vector<long long>{48, 24});
}

TEST_CASE("quasi-irreducibility") {
    CHECK(is_quasi_irreducible(EtaQuotient(1, {1})));
    CHECK(is_quasi_irreducible(EtaQuotient(2, {2, -1})));
    CHECK(is_quasi_irreducible(EtaQuotient(2, {0, 1})));
    CHECK_FALSE(is_quasi_irreducible(EtaQuotient(1, {24})));
    CHECK_FALSE(is_quasi_irreducible(EtaQuotient(2, {1, 1})));
    // The weight-3/2 extremal quotient of level 4 lives at exact level 2,
    // where it splits.
    EtaQuotient f4 = extremal_quotient(4);
    CHECK(level(f4) == 2);
    CHECK_FALSE(is_quasi_irreducible(f4));
    CHECK_THROWS_AS(is_quasi_irreducible(EtaQuotient()), std::invalid_argument);
    CHECK_THROWS_AS(is_quasi_irreducible(EtaQuotient(2, {1, -1})), std::invalid_argument);
}

TEST_CASE("census at level 2: the complete desk picture") {
    auto census = nonfactorizable_census(2);
    REQUIRE(census.size() == 4);
    // Sorted by weight then scaled orders: (0,3), (1,2), (2,1), (3,0).
    CHECK(census[0].quotient.exponents == std::vector<long long>{-1, 2});
    CHECK(census[0].source == CensusSource::b_column);
    CHECK(census[0].column_divisor == 2);
    CHECK(census[1].quotient.exponents == std::vector<long long>{0, 1});
    CHECK(census[1].source == CensusSource::parallelepiped_point);
    CHECK(census[2].quotient.exponents == std::vector<long long>{1, 0});
    CHECK(census[3].quotient.exponents == std::vector<long long>{2, -1});
    CHECK(census[3].source == CensusSource::b_column);
    CHECK(census[3].column_divisor == 1);
    for (const auto& e : census) {
        CHECK(e.k == 1);
        CHECK(e.quasi_irreducible);
        CHECK(is_holomorphic(e.quotient));
    }
    CHECK(census[0].level == 2);
    CHECK(census[1].level == 2);
    CHECK(census[2].level == 1);
    CHECK(census[3].level == 2);
}

TEST_CASE("census matches the brute-force oracle") {
    for (long long n : {2, 3, 4, 6}) {
        INFO("N=" << n);
        auto census = nonfactorizable_census(n);
        auto want = oracle::census_bruteforce(n);
        CHECK(census_exponents(census) ==
              std::set<std::vector<long long>>(want.begin(), want.end()));
        CHECK(census.size() == want.size());
        // Sorted by weight, then lexicographically by scaled orders.
        for (std::size_t i = 1; i < census.size(); ++i) {
            bool ordered =
                census[i - 1].k < census[i].k ||
                (census[i - 1].k == census[i].k &&
                 scaled_orders(census[i - 1].quotient) < scaled_orders(census[i].quotient));
            CHECK(ordered);
        }
        long long columns = 0;
        for (const auto& e : census)
            if (e.source == CensusSource::b_column) ++columns;
        CHECK(columns == num_divisors(n));
    }
}

TEST_CASE("census entries really are non-factorizable") {
    for (long long n : {2, 3, 4}) {
        for (const auto& e : nonfactorizable_census(n)) {
            INFO("N=" << n << " f=" << format_eta(e.quotient));
            CHECK_FALSE(factorizable_on(e.quotient, n).has_value());
        }
    }
}

TEST_CASE("census respects the closed-form bounds") {
    for (long long n : {2, 3, 4, 6, 8, 9}) {
        auto census = nonfactorizable_census(n);
        long long exact = 0;
        for (const auto& e : census)
            if (e.level == n) ++exact;
        INFO("N=" << n);
        CHECK(Rat(Int(census.size())) <= omega_bound(n));
        CHECK(Rat(Int(exact)) <= omega_zero_bound(n));
    }
}

TEST_CASE("census for odd primes: three level-exact entries") {
    for (long long p : {3, 5, 7}) {
        auto census = nonfactorizable_census(p);
        std::set<std::vector<long long>> exact;
        for (const auto& e : census)
            if (e.level == p) exact.insert(e.quotient.exponents);
        std::set<std::vector<long long>> want{{0, 1}, {p, -1}, {-1, p}};
        INFO("p=" << p);
        CHECK(exact == want);
        CHECK(k_max(p) == p - 1);
    }
}

TEST_CASE("census is deterministic across worker counts") {
    auto a = nonfactorizable_census(6, 1);
    auto b = nonfactorizable_census(6, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].quotient == b[i].quotient);
        CHECK(a[i].source == b[i].source);
        CHECK(a[i].column_divisor == b[i].column_divisor);
        CHECK(a[i].level == b[i].level);
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].quasi_irreducible == b[i].quasi_irreducible);
    }
}

TEST_CASE("largest non-factorizable weights at desk scale") {
    CHECK(k_max(2) == 1);
    CHECK(k_max(4) == 1);
    CHECK(k_max(9) == 4);
    CHECK(k_max(6) == 2);
    CHECK(k_max(12) == 3);
    CHECK(k_max(16) == 2);
}

TEST_CASE("smallest primitive quasi-irreducible weights") {
    CHECK(k_min(1) == 1);
    CHECK(k_min(2) == 1);
    CHECK(k_min(4) == 1);
    for (const auto& [n, kmin] : expected::kmin_slice()) {
        INFO("N=" << n);
        CHECK(k_min(n) == kmin);
    }
    CHECK(k_min(26, 4) == std::nullopt);
    CHECK(k_min(26, 5) == 5);
    CHECK_THROWS_AS(k_min(0), std::invalid_argument);
}

TEST_CASE("column quotients") {
    auto cols = column_quotients(12);
    REQUIRE(cols.size() == 6);
    auto ld = LevelData::get(12);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        long long t = ld->basis.divisors[j];
        std::vector<Int> y = scaled_orders(cols[j]);
        for (std::size_t i = 0; i < ld->dim; ++i)
            CHECK(y[i] == (i == j ? ld->clear_denoms[j] : Int(0)));
        CHECK(weight_numerator(cols[j]) ==
              phi(rad(12)) * phi(rad(std::gcd(t, 12 / t))));
    }
    CHECK(column_quotients(1).size() == 1);
    CHECK(column_quotients(2).size() == 2);
}

TEST_CASE("extremal divisibility") {
    for (long long n : {1, 2, 3, 4, 6}) {
        INFO("N=" << n);
        CHECK(verify_extremal_divisibility(n));
    }
}

TEST_CASE("distinguished quasi-irreducible family") {
    auto f4 = irreducible_family(4);
    REQUIRE(f4.size() == 2);
    CHECK(f4[0].t == 1);
    CHECK(f4[0].k == 1);
    CHECK(f4[1].t == 2);
    CHECK(f4[1].k == 1);

    auto f8 = irreducible_family(8);
    REQUIRE(f8.size() == 3);
    for (const auto& m : f8) CHECK(m.k == 1);

    auto f9 = irreducible_family(9);
    REQUIRE(f9.size() == 2);
    CHECK(f9[0].t == 1);
    CHECK(f9[0].k == 2);
    CHECK(f9[1].t == 3);
    CHECK(f9[1].k == 4);

    auto f12 = irreducible_family(12);
    REQUIRE(f12.size() == 2);
    CHECK(f12[0].t == 1);
    CHECK(f12[1].t == 2);

    auto f6 = irreducible_family(6);   // 6/rad(6) = 1: only t = 1
    REQUIRE(f6.size() == 1);
    CHECK(f6[0].k == phi(6));
}

TEST_CASE("irreducibility semi-decision") {
    EtaQuotient g(2, {2, -1});
    auto v = is_irreducible_up_to(g, 2);
    CHECK_FALSE(v.refuted);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.last_modulus == 8);

    auto f9 = irreducible_family(9);
    for (const auto& m : f9) {
        auto verdict = is_irreducible_up_to(m.quotient, 1);
        INFO("t=" << m.t);
        CHECK_FALSE(verdict.refuted);
        // Search runs from the member's own level (3 for t=1, 9 for t=3).
        CHECK(verdict.last_modulus == exact_level(m.quotient) * 3);
    }
    CHECK(exact_level(f9[1].quotient) == 9);
    CHECK_THROWS_AS(is_irreducible_up_to(EtaQuotient(1, {24})), std::invalid_argument);
}

TEST_CASE("first conjecture check: weight floor vs largest prime power") {
    auto rows = check_conjecture_1({6, 10, 22, 26});
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        INFO("N=" << r.n);
        CHECK_FALSE(r.skipped);
        REQUIRE(r.kmin.has_value());
        CHECK(r.holds);
    }
    CHECK(rows[0].kmin == 1);
    CHECK(rows[0].max_np == 3);
    CHECK(rows[3].kmin == 5);
    CHECK(rows[3].max_np == 13);

    auto guarded = check_conjecture_1({5040});   // 60 divisors: refused, not fatal
    REQUIRE(guarded.size() == 1);
    CHECK(guarded[0].skipped);
    CHECK_FALSE(guarded[0].note.empty());

    // No primitive quasi-irreducible quotient of level 8 exists at all, so
    // the conditional claim holds vacuously there.
    auto vac = check_conjecture_1({8});
    REQUIRE(vac.size() == 1);
    CHECK_FALSE(vac[0].skipped);
    CHECK_FALSE(vac[0].kmin.has_value());
    CHECK(vac[0].holds);
    CHECK_FALSE(vac[0].note.empty());
}

TEST_CASE("second conjecture check: closed form for odd prime powers") {
    auto rep = check_conjecture_2(3, 4);
    CHECK(rep.p == 3);
    CHECK(rep.n == 4);
    CHECK(rep.predicted == 9);
    CHECK(rep.computed >= 1);
    CHECK(rep.match == (rep.predicted == rep.computed));
    CHECK_THROWS_AS(check_conjecture_2(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture_2(9, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture_2(3, 3), std::invalid_argument);
}
