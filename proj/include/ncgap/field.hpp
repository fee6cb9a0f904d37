#pragma once

#include <cstdint>
#include <vector>

namespace ncgap {

// Element of GF(2^b) in polynomial basis: bit i is the coefficient of x^i.
using FieldElem = std::uint32_t;

// GF(2^b) arithmetic context, 1 <= b <= 32. Immutable after construction and
// safely shareable across threads; all operations are pure.
class FieldCtx {
public:
    // Picks the lowest-bitmask irreducible reduction polynomial of degree b.
    explicit FieldCtx(unsigned b);
    // Explicit reduction polynomial; throws if it is not irreducible of degree b.
    FieldCtx(unsigned b, std::uint64_t reduction_poly);

    unsigned degree() const { return b_; }
    std::uint64_t reduction_poly() const { return poly_; }
    std::uint64_t order() const { return std::uint64_t{1} << b_; }  // 2^b
    std::uint64_t mult_group_order() const { return order() - 1; }

    bool contains(FieldElem a) const { return b_ == 32 || a < (std::uint32_t{1} << b_); }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws on a == 0
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    // g^e for a generator of known multiplicative order m; e is reduced mod m,
    // negative exponents map to m - (e mod m).
    FieldElem pow_mod_order(FieldElem g, std::int64_t e, std::uint64_t m) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t element_order(FieldElem a) const;

    bool operator==(const FieldCtx& other) const {
        return b_ == other.b_ && poly_ == other.poly_;
    }

private:
    unsigned b_;
    std::uint64_t poly_;
};

// Exhaustive irreducibility test over GF(2): no root and no factor of degree
// <= deg/2, by trial division. Intended for degrees up to 32.
bool gf2_poly_irreducible(std::uint64_t poly);

// Deterministic field construction (lowest-bitmask irreducible), 1 <= b <= 32.
FieldCtx make_field(unsigned b);

// Smallest t >= 1 with 2^t = 1 (mod m); requires m odd, m >= 3. Always t <= m-1.
unsigned order_of_two_mod(std::uint64_t m);

// Smallest-bitmask element of multiplicative order exactly m; requires that m
// divides 2^b - 1.
FieldElem find_subgroup_generator(const FieldCtx& ctx, std::uint64_t m);

// Prime factorization by trial division (small inputs), ascending, distinct.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ncgap
