#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "sgforge/semigroup.hpp"
#include "support/brute.hpp"

using sgforge::NumericalSemigroup;
using sgforge::errc;
using sgforge::error;
using sgforge::int64;

namespace {

bool throws_with(errc code, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("construction rejects bad generator sets") {
    CHECK(throws_with(errc::empty_generators, [] { NumericalSemigroup::from_generators({}); }));
    CHECK(throws_with(errc::not_numerical, [] { NumericalSemigroup::from_generators({4, 6}); }));
    CHECK(throws_with(errc::not_numerical, [] { NumericalSemigroup::from_generators({6, 10}); }));
    CHECK(throws_with(errc::zero_or_negative, [] { NumericalSemigroup::from_generators({0, 3}); }));
    CHECK(throws_with(errc::zero_or_negative, [] { NumericalSemigroup::from_generators({-2, 3}); }));
    CHECK(throws_with(errc::generator_too_large, [] { NumericalSemigroup::from_generators({4, 2'000'000}); }));
    CHECK_NOTHROW(NumericalSemigroup::from_generators({4, 1'999'999}, 2'000'000));
    // gcd 1 overall but no coprime pair
    CHECK_NOTHROW(NumericalSemigroup::from_generators({6, 10, 15}));
}

TEST_CASE("intro example <4,6,13>") {
    auto s = NumericalSemigroup::from_generators({4, 6, 13});
    CHECK(s.conductor() == 16);
    CHECK(s.frobenius() == 15);
    CHECK(s.gaps() == std::vector<int64>{1, 2, 3, 5, 7, 9, 11, 15});
    CHECK(s.genus() == 8);
    CHECK(s.is_self_dual());
    CHECK(s.multiplicity() == 4);
    CHECK(s.embedding_dim() == 3);
    CHECK(s.contains(12));
    CHECK_FALSE(s.contains(15));
    CHECK(s.contains(16));
    CHECK(s.contains(10'000'000));
    CHECK_FALSE(s.contains(-4));
    CHECK(s.apery_set(4) == std::vector<int64>{0, 13, 6, 19});
}

TEST_CASE("small fixtures") {
    auto s25 = NumericalSemigroup::from_generators({2, 5});
    CHECK(s25.frobenius() == 3);
    CHECK(s25.conductor() == 4);
    CHECK(s25.apery_set(2) == std::vector<int64>{0, 5});

    auto s = NumericalSemigroup::from_generators({9, 21, 22});
    CHECK(s.frobenius() == 77);
    CHECK(s.conductor() == 78);
    CHECK(s.genus() == 39);
    CHECK(s.is_self_dual());
    CHECK(s.minimal_generators() == std::vector<int64>{9, 21, 22});

    auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(s345.gaps() == std::vector<int64>{1, 2});
    CHECK_FALSE(s345.is_self_dual());  // 2*genus = 4 != 3 = conductor

    auto nat = NumericalSemigroup::from_generators({1});
    CHECK(nat.conductor() == 0);
    CHECK(nat.frobenius() == -1);
    CHECK(nat.genus() == 0);
    CHECK(nat.gaps().empty());
    CHECK(nat.minimal_generators() == std::vector<int64>{1});
    CHECK(nat.is_self_dual());
    CHECK(nat.contains(0));
    CHECK(nat.contains(1));
}

TEST_CASE("minimal generator extraction") {
    CHECK(NumericalSemigroup::from_generators({4, 6, 13, 17}).minimal_generators() ==
          std::vector<int64>{4, 6, 13});
    CHECK(NumericalSemigroup::from_generators({4, 5, 10, 11}).minimal_generators() ==
          std::vector<int64>{4, 5, 11});
    // input is deduplicated and sorted but otherwise kept
    auto s = NumericalSemigroup::from_generators({13, 4, 6, 4, 17});
    CHECK(s.generators() == std::vector<int64>{4, 6, 13, 17});
    CHECK(s.minimal_generators() == std::vector<int64>{4, 6, 13});
}

TEST_CASE("apery set preconditions") {
    auto s = NumericalSemigroup::from_generators({4, 6, 13});
    CHECK(throws_with(errc::m_not_in_semigroup, [&] { s.apery_set(5); }));
    CHECK(throws_with(errc::m_not_in_semigroup, [&] { s.apery_set(0); }));
    CHECK(throws_with(errc::m_not_in_semigroup, [&] { s.apery_set(-4); }));
    // any member works, not just the multiplicity
    auto ap6 = s.apery_set(6);
    CHECK(ap6 == std::vector<int64>{0, 13, 8, 21, 4, 17});
}

TEST_CASE("agreement with the brute-force oracle on random generator sets") {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int64> count(1, 5), value(2, 60);
    int done = 0;
    while (done < 200) {
        std::vector<int64> gens(static_cast<size_t>(count(rng)));
        for (auto& g : gens) g = value(rng);
        if (sgforge::gcd_all(gens) != 1) continue;
        ++done;

        auto s = NumericalSemigroup::from_generators(gens);
        int64 bound = 2 * s.conductor() + *std::max_element(gens.begin(), gens.end()) + 2;
        auto sieve = brute::member_sieve(gens, bound);

        REQUIRE(s.conductor() == brute::conductor_from_sieve(sieve));
        for (int64 n = 0; n <= bound; ++n)
            REQUIRE(s.contains(n) == sieve[static_cast<size_t>(n)]);
        REQUIRE(s.gaps() == brute::gaps_from_sieve(sieve));
        REQUIRE(s.genus() == static_cast<int64>(s.gaps().size()));
        REQUIRE(s.minimal_generators() == brute::minimal_generators(gens, bound));
        REQUIRE(s.apery_set(s.multiplicity()) ==
                brute::apery_set(gens, s.multiplicity(), bound));
    }
}

TEST_CASE("closure and structural invariants on random semigroups") {
    std::mt19937 rng(91u);
    std::uniform_int_distribution<int64> count(2, 6), value(2, 80), probe(0, 300);
    for (int iter = 0; iter < 120; ++iter) {
        std::vector<int64> gens(static_cast<size_t>(count(rng)));
        for (auto& g : gens) g = value(rng);
        if (sgforge::gcd_all(gens) != 1) continue;
        auto s = NumericalSemigroup::from_generators(gens);

        // closed under addition
        for (int k = 0; k < 40; ++k) {
            int64 a = probe(rng), b = probe(rng);
            if (s.contains(a) && s.contains(b)) REQUIRE(s.contains(a + b));
        }
        // 0 in S, nothing above frobenius is missing
        REQUIRE(s.contains(0));
        REQUIRE_FALSE(s.contains(s.frobenius()));
        REQUIRE(s.contains(s.conductor()));

        // multiplicity <= embedding dimension chain
        REQUIRE(s.embedding_dim() <= s.multiplicity());

        // regenerating from the minimal generators is idempotent
        auto s2 = NumericalSemigroup::from_generators(s.minimal_generators());
        REQUIRE(s2 == s);
        REQUIRE(s2.conductor() == s.conductor());
        REQUIRE(s2.minimal_generators() == s2.generators());

        // apery values: least in class, and pairwise distinct mod m
        int64 m = s.multiplicity();
        auto ap = s.apery_set(m);
        REQUIRE(static_cast<int64>(ap.size()) == m);
        for (int64 r = 0; r < m; ++r) {
            REQUIRE(ap[static_cast<size_t>(r)] % m == r);
            REQUIRE(s.contains(ap[static_cast<size_t>(r)]));
            if (ap[static_cast<size_t>(r)] >= m) REQUIRE_FALSE(s.contains(ap[static_cast<size_t>(r)] - m));
        }
    }
}

TEST_CASE("sub-semigroup membership handles gcd > 1 generating sets") {
    using sgforge::subsemigroup_contains;
    CHECK(subsemigroup_contains({4}, 12));
    CHECK_FALSE(subsemigroup_contains({4}, 13));
    CHECK(subsemigroup_contains({8, 20}, 36));       // 16 + 20
    CHECK_FALSE(subsemigroup_contains({8, 20}, 30)); // even, but not 8a + 20b
    CHECK_FALSE(subsemigroup_contains({8, 20}, 27));
    CHECK(subsemigroup_contains({9, 21}, 63));
    CHECK(subsemigroup_contains({9, 21}, 66));
    CHECK(subsemigroup_contains({6, 10, 15}, 31));   // 6 + 10 + 15
    CHECK(subsemigroup_contains({5}, 0));
    CHECK_FALSE(subsemigroup_contains({5}, -5));
}
