#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncgap/common.hpp"

namespace ncgap {

// Matching vector family over Z_m^h: <u_i, v_i> = 0 mod m for every i, and
// <u_i, v_j> mod m lies in S for every i != j.
struct MatchingVectorFamily {
    std::uint64_t m = 0;
    std::size_t h = 0;
    std::vector<std::vector<std::uint32_t>> U;  // n vectors, entries in Z_m
    std::vector<std::vector<std::uint32_t>> V;
    std::vector<std::uint32_t> S;               // sorted nonzero residues mod m

    std::size_t size() const { return U.size(); }
};

struct FamilyCheck {
    bool ok = true;
    std::string violation;  // first violation when not ok
};

// h = n, u_i = e_i, v_i = (1,...,1) - e_i, S = {1}. Requires n >= 2, m >= 2.
MatchingVectorFamily trivial_family(std::size_t n, std::uint64_t m);

FamilyCheck validate_family(const MatchingVectorFamily& fam);

// Nonzero residues of Z_m that are 0 or 1 modulo every prime factor of m.
// Requires m squarefree.
std::vector<std::uint32_t> canonical_set(std::uint64_t m);

struct BruteForceStats {
    std::uint64_t candidates_examined = 0;
    bool budget_exhausted = false;
};

// Backtracking search for a validating family of size >= target_n. Candidate
// pairs are scanned in lexicographic order, so the result is deterministic.
// Requires m^h <= 10^6. Returns nullopt on failure (exhausted space or budget).
std::optional<MatchingVectorFamily> brute_force_family(std::uint64_t m, std::size_t h,
                                                       const std::vector<std::uint32_t>& S,
                                                       std::size_t target_n,
                                                       std::uint64_t budget,
                                                       BruteForceStats* stats = nullptr);

// Parameter chain for building large matching-vector codes: t odd primes from
// the interval [(c/2) t ln t, c t ln t] with c minimal, m their product, the
// smallest multiple w of t with w^(w/t) >= k, exponents e_i minimal with
// p_i^{e_i} > w^{1/t}, d = max p_i^{e_i}, h = ceil(c' w^{1+1/t}) with c'
// minimal so that h >= d, and the predicted codeword length m^binom(h, <=d).
struct MvParameters {
    std::uint64_t k = 0;
    unsigned t = 0;
    unsigned interval_constant = 0;  // minimal integer c
    std::vector<std::uint64_t> primes;
    BigInt m;
    std::uint64_t w = 0;
    std::vector<unsigned> exponents;
    BigInt d;
    unsigned h_constant = 0;  // minimal integer c'
    BigInt h;
    BigInt binom_h_le_d;
    BigInt binom_h_w;
    bool n_materialized = false;
    BigInt predicted_n;               // m^binom(h, <=d) when materialized
    bool exceeds_2pow64_digits = false;
    Rational padding_blowup;          // w^(w/t) / k, reported rather than applied
};

MvParameters mv_parameters(std::uint64_t k, unsigned t);

Json family_to_json(const MatchingVectorFamily& fam);
MatchingVectorFamily family_from_json(const Json& j);

// Mixed-radix index helpers for Z_m^h, lexicographic (first coordinate most
// significant).
std::vector<std::uint32_t> index_to_point(std::uint64_t index, std::uint64_t m, std::size_t h);
std::uint64_t point_to_index(const std::vector<std::uint32_t>& z, std::uint64_t m);

}  // namespace ncgap
