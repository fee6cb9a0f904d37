#include "ncgap/field.hpp"

#include <stdexcept>
#include <string>

namespace ncgap {

namespace {

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p > 1) {
        p >>= 1;
        ++d;
    }
    return d;
}

// Remainder of a by b in GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned db = poly_degree(b);
    while (a >= (std::uint64_t{1} << db)) {
        const unsigned da = poly_degree(a);
        a ^= b << (da - db);
    }
    return a;
}

}  // namespace

bool gf2_poly_irreducible(std::uint64_t poly) {
    const unsigned d = poly_degree(poly);
    if (d == 0) return false;
    if (d == 1) return true;
    // roots: p(0) == constant bit, p(1) == parity of coefficients
    if ((poly & 1) == 0) return false;
    if (__builtin_parityll(poly) == 0) return false;
    for (unsigned dd = 2; dd <= d / 2; ++dd) {
        for (std::uint64_t q = (std::uint64_t{1} << dd); q < (std::uint64_t{1} << (dd + 1)); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldCtx::FieldCtx(unsigned b) : b_(b), poly_(0) {
    if (b < 1 || b > 32) throw std::invalid_argument("field degree b must be in [1, 32]");
    for (std::uint64_t cand = (std::uint64_t{1} << b); cand < (std::uint64_t{1} << (b + 1)); ++cand) {
        if (gf2_poly_irreducible(cand)) {
            poly_ = cand;
            break;
        }
    }
    if (poly_ == 0) throw std::logic_error("no irreducible polynomial found");
}

FieldCtx::FieldCtx(unsigned b, std::uint64_t reduction_poly) : b_(b), poly_(reduction_poly) {
    if (b < 1 || b > 32) throw std::invalid_argument("field degree b must be in [1, 32]");
    if (poly_degree(reduction_poly) != b || !gf2_poly_irreducible(reduction_poly))
        throw std::invalid_argument("reduction polynomial is not irreducible of degree b");
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const { return a ^ b; }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    std::uint64_t bb = b;
    while (bb != 0) {
        if (bb & 1) acc ^= aa;
        bb >>= 1;
        aa <<= 1;
        if (aa & (std::uint64_t{1} << b_)) aa ^= poly_;
    }
    // acc has degree < b by construction of the reduction above
    return static_cast<FieldElem>(acc);
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    FieldElem result = 1;
    FieldElem base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow(a, order() - 2);
}

FieldElem FieldCtx::pow_mod_order(FieldElem g, std::int64_t e, std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("order m must be positive");
    const std::int64_t sm = static_cast<std::int64_t>(m);
    std::int64_t r = e % sm;
    if (r < 0) r += sm;
    return pow(g, static_cast<std::uint64_t>(r));
}

std::uint64_t FieldCtx::element_order(FieldElem a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = mult_group_order();
    for (std::uint64_t p : prime_factors(ord)) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

FieldCtx make_field(unsigned b) { return FieldCtx(b); }

unsigned order_of_two_mod(std::uint64_t m) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
    if (m % 2 == 0) throw std::invalid_argument("m must be odd");
    std::uint64_t acc = 2 % m;
    unsigned t = 1;
    while (acc != 1) {
        acc = (acc * 2) % m;
        ++t;
        if (t > m) throw std::logic_error("order of 2 not found below m");
    }
    return t;
}

FieldElem find_subgroup_generator(const FieldCtx& ctx, std::uint64_t m) {
    if (m == 0 || ctx.mult_group_order() % m != 0)
        throw std::invalid_argument("m does not divide 2^b - 1");
    const auto primes = prime_factors(m);
    for (std::uint64_t cand = 1; cand < ctx.order(); ++cand) {
        const FieldElem g = static_cast<FieldElem>(cand);
        if (ctx.pow(g, m) != 1) continue;
        bool exact = true;
        for (std::uint64_t p : primes) {
            if (ctx.pow(g, m / p) == 1) {
                exact = false;
                break;
            }
        }
        if (exact) return g;
    }
    throw std::logic_error("no element of the requested order");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace ncgap
