#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncgap/field.hpp"
#include "ncgap/rng.hpp"

using namespace ncgap;

TEST_CASE("make_field picks the lowest-bitmask irreducible polynomial") {
    CHECK(make_field(1).reduction_poly() == 0b10);
    CHECK(make_field(2).reduction_poly() == 0b111);    // x^2+x+1
    CHECK(make_field(3).reduction_poly() == 0b1011);   // x^3+x+1, not x^3+x^2+1
    CHECK(make_field(8).degree() == 8);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(33), std::invalid_argument);
}

TEST_CASE("explicit reduction polynomial is validated") {
    CHECK_NOTHROW(FieldCtx(3, 0b1101));
    CHECK_THROWS_AS(FieldCtx(2, 0b101), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(FieldCtx(3, 0b111), std::invalid_argument);  // wrong degree
}

TEST_CASE("GF(4) arithmetic on gamma = class of x") {
    const FieldCtx f = make_field(2);
    const FieldElem g = 2;  // gamma
    CHECK(f.mul(g, g) == 3);               // gamma^2 = gamma + 1
    CHECK(f.mul(g, f.add(g, 1)) == 1);     // gamma * (gamma+1) = 1
    CHECK(f.inv(1) == 1);
    CHECK(f.inv(g) == 3);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("multiplicative inverses, exhaustive for b <= 8") {
    for (unsigned b = 1; b <= 8; ++b) {
        const FieldCtx f = make_field(b);
        for (FieldElem a = 1; a < f.order(); ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("multiplicative inverses, randomized for larger b") {
    const FieldCtx f = make_field(16);
    RngStream rng(7);
    for (int i = 0; i < 50; ++i) {
        const FieldElem a = static_cast<FieldElem>(1 + rng.below(f.order() - 1));
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
    const FieldCtx f32 = make_field(17);
    for (int i = 0; i < 20; ++i) {
        const FieldElem a = static_cast<FieldElem>(1 + rng.below(f32.order() - 1));
        CHECK(f32.mul(a, f32.inv(a)) == 1);
    }
}

TEST_CASE("addition is an involution") {
    const FieldCtx f = make_field(6);
    for (FieldElem a = 0; a < f.order(); ++a) CHECK(f.add(a, a) == 0);
}

TEST_CASE("order_of_two_mod") {
    CHECK(order_of_two_mod(3) == 2);
    CHECK(order_of_two_mod(7) == 3);
    CHECK(order_of_two_mod(5) == 4);
    CHECK(order_of_two_mod(15) == 4);
    CHECK_THROWS_AS(order_of_two_mod(4), std::invalid_argument);
    CHECK_THROWS_AS(order_of_two_mod(1), std::invalid_argument);
    for (std::uint64_t m = 3; m < 100; m += 2) {
        CHECK(order_of_two_mod(m) <= m - 1);
    }
}

TEST_CASE("find_subgroup_generator") {
    const FieldCtx f4 = make_field(2);
    CHECK(find_subgroup_generator(f4, 3) == 2);  // gamma has order 3
    CHECK(find_subgroup_generator(f4, 1) == 1);

    const FieldCtx f8 = make_field(3);
    const FieldElem g = find_subgroup_generator(f8, 7);
    CHECK(g == 2);  // smallest primitive element
    CHECK_THROWS_AS(find_subgroup_generator(f4, 5), std::invalid_argument);

    // generator contract: g^m = 1 and every smaller positive power differs from 1
    struct Case {
        unsigned b;
        std::uint64_t m;
    };
    for (const Case c : {Case{2, 3}, Case{3, 7}, Case{4, 5}, Case{4, 15}, Case{6, 9}}) {
        const FieldCtx f = make_field(c.b);
        const FieldElem gen = find_subgroup_generator(f, c.m);
        CHECK(f.pow(gen, c.m) == 1);
        for (std::uint64_t i = 1; i < c.m; ++i) CHECK(f.pow(gen, i) != 1);
    }
}

TEST_CASE("pow_mod_order handles negative exponents") {
    const FieldCtx f = make_field(2);
    const FieldElem g = find_subgroup_generator(f, 3);
    CHECK(f.pow_mod_order(g, -1, 3) == f.pow(g, 2));
    CHECK(f.pow_mod_order(g, -4, 3) == f.pow(g, 2));
    CHECK(f.pow_mod_order(g, 5, 3) == f.pow(g, 2));
    CHECK(f.pow_mod_order(g, 0, 3) == 1);
}

TEST_CASE("element_order") {
    const FieldCtx f = make_field(4);
    CHECK(f.element_order(1) == 1);
    int primitive_count = 0;
    for (FieldElem a = 1; a < f.order(); ++a) {
        const std::uint64_t ord = f.element_order(a);
        CHECK(15 % ord == 0);
        CHECK(f.pow(a, ord) == 1);
        if (ord == 15) ++primitive_count;
    }
    CHECK(primitive_count == 8);  // phi(15)
}
