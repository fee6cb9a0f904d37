#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgap/field.hpp"
#include "ncgap/mvfamily.hpp"

using namespace ncgap;

TEST_CASE("trivial family") {
    const MatchingVectorFamily fam = trivial_family(2, 3);
    CHECK(fam.U[0] == std::vector<std::uint32_t>{1, 0});
    CHECK(fam.V[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(fam.S == std::vector<std::uint32_t>{1});
    // <u_1, v_2> = <(1,0), (1,0)>... v_2 = 1 - e_2 = (1,0); inner product 1
    CHECK(validate_family(fam).ok);

    CHECK(validate_family(trivial_family(4, 3)).ok);
    CHECK(trivial_family(4, 3).h == 4);
    CHECK(validate_family(trivial_family(2, 2)).ok);
    CHECK_THROWS_AS(trivial_family(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(trivial_family(2, 1), std::invalid_argument);
}

TEST_CASE("validate_family reports the first violation") {
    MatchingVectorFamily bad;
    bad.m = 3;
    bad.h = 2;
    bad.S = {1};
    bad.U = {{1, 0}};
    bad.V = {{1, 0}};  // <u_1, v_1> = 1 != 0
    const FamilyCheck check = validate_family(bad);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("u_1") != std::string::npos);

    MatchingVectorFamily fam = trivial_family(3, 3);
    fam.S = {2};
    CHECK_FALSE(validate_family(fam).ok);  // cross products are 1, not in {2}
}

TEST_CASE("canonical sets") {
    CHECK(canonical_set(3) == std::vector<std::uint32_t>{1});
    CHECK(canonical_set(6) == std::vector<std::uint32_t>{1, 3, 4});
    CHECK(canonical_set(15) == std::vector<std::uint32_t>{1, 6, 10});
    CHECK_THROWS_AS(canonical_set(12), std::invalid_argument);  // not squarefree

    // defining residue condition re-checked per element, and 0 never appears
    for (std::uint64_t m : {std::uint64_t{10}, std::uint64_t{21}, std::uint64_t{30}}) {
        for (std::uint32_t s : canonical_set(m)) {
            CHECK(s != 0);
            for (std::uint64_t p : prime_factors(m)) {
                CHECK(s % p <= 1);
            }
        }
    }
}

TEST_CASE("brute force family search") {
    SUBCASE("finds a size-2 family where the trivial family exists") {
        const auto fam = brute_force_family(3, 2, {1}, 2, 100000);
        REQUIRE(fam.has_value());
        CHECK(fam->size() >= 2);
        CHECK(validate_family(*fam).ok);
    }
    SUBCASE("a single pair only needs an orthogonal pair") {
        const auto fam = brute_force_family(3, 2, {1}, 1, 100000);
        REQUIRE(fam.has_value());
        CHECK(fam->size() == 1);
        std::uint64_t ip = 0;
        for (std::size_t t = 0; t < 2; ++t) ip += fam->U[0][t] * fam->V[0][t];
        CHECK(ip % 3 == 0);
    }
    SUBCASE("m=2, h=1 cannot reach size 3") {
        BruteForceStats stats;
        const auto fam = brute_force_family(2, 1, {1}, 3, 1000000, &stats);
        CHECK_FALSE(fam.has_value());
        CHECK_FALSE(stats.budget_exhausted);  // exhausted the space, not the budget
    }
    SUBCASE("tiny budget reports exhaustion") {
        BruteForceStats stats;
        const auto fam = brute_force_family(3, 2, {1}, 4, 3, &stats);
        CHECK_FALSE(fam.has_value());
        CHECK(stats.budget_exhausted);
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(brute_force_family(10, 7, {1}, 2, 100), ResourceLimitError);
    }
}

TEST_CASE("mv parameter chain") {
    SUBCASE("k=2, t=2: smallest instance") {
        const MvParameters p = mv_parameters(2, 2);
        CHECK(p.w == 2);  // 2^(2/2) = 2 >= 2
        CHECK(p.primes.size() == 2);
        CHECK(p.m == 15);  // minimal integer c = 4 gives primes {3, 5}
        CHECK(p.h >= p.d);
        CHECK(p.binom_h_w >= 2);
        CHECK(p.n_materialized);
        CHECK(p.predicted_n == boost::multiprecision::pow(BigInt(15), 63));
    }
    SUBCASE("k=4, t=2: w is the smallest even w with w^(w/2) >= 4") {
        const MvParameters p = mv_parameters(4, 2);
        CHECK(p.w == 4);  // 2^1 = 2 < 4 <= 16 = 4^2
    }
    SUBCASE("invariants across a grid") {
        for (std::uint64_t k : {std::uint64_t{2}, std::uint64_t{4}, std::uint64_t{16},
                                std::uint64_t{64}, std::uint64_t{1024}}) {
            for (unsigned t : {2u, 3u}) {
                const MvParameters p = mv_parameters(k, t);
                CHECK(p.primes.size() == t);
                CHECK(p.w % t == 0);
                CHECK(p.h >= p.d);
                CHECK(p.binom_h_w >= k);  // binom(h, w) >= (h/w)^w >= k
                CHECK(p.padding_blowup >= 1);
                for (std::size_t i = 0; i < p.primes.size(); ++i) {
                    // e_i minimal with p^(e_i t) > w
                    const BigInt pe = boost::multiprecision::pow(BigInt(p.primes[i]),
                                                                 p.exponents[i] * t);
                    CHECK(pe > p.w);
                    if (p.exponents[i] > 1) {
                        CHECK(boost::multiprecision::pow(BigInt(p.primes[i]),
                                                         (p.exponents[i] - 1) * t) <= p.w);
                    }
                }
            }
        }
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(mv_parameters(1, 2), std::invalid_argument);
        CHECK_THROWS_AS(mv_parameters(4, 1), std::invalid_argument);
    }
}

TEST_CASE("family json round trip") {
    const MatchingVectorFamily fam = trivial_family(3, 5);
    const MatchingVectorFamily back = family_from_json(family_to_json(fam));
    CHECK(back.m == fam.m);
    CHECK(back.h == fam.h);
    CHECK(back.U == fam.U);
    CHECK(back.V == fam.V);
    CHECK(back.S == fam.S);
    CHECK(validate_family(back).ok);
}

TEST_CASE("point indexing is lexicographic") {
    CHECK(point_to_index({0, 0}, 3) == 0);
    CHECK(point_to_index({0, 1}, 3) == 1);
    CHECK(point_to_index({1, 0}, 3) == 3);
    CHECK(point_to_index({2, 2}, 3) == 8);
    for (std::uint64_t idx = 0; idx < 27; ++idx) {
        CHECK(point_to_index(index_to_point(idx, 3, 3), 3) == idx);
    }
}
