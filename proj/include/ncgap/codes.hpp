#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncgap/common.hpp"
#include "ncgap/field.hpp"
#include "ncgap/mvfamily.hpp"
#include "ncgap/rng.hpp"

namespace ncgap {

enum class CodeBackend { hadamard, matching_vector, mock_smooth };

// A locally decodable code plus its decoder data. Immutable and shareable.
// mock_smooth has no encode/decode semantics; it only supplies random,
// pairwise disjoint query sets for the graph constructions.
struct CodeSpec {
    CodeBackend backend = CodeBackend::mock_smooth;
    std::size_t k = 0;  // message length
    std::size_t N = 0;  // codeword length
    std::size_t q = 0;  // query count
    Rational delta;     // decoding radius
    Rational epsilon;   // failure bound; q*delta for smooth-derived decoders
    FieldCtx field{1};

    // matching_vector backend data
    MatchingVectorFamily family;
    FieldElem generator = 0;
    std::vector<FieldElem> decode_poly;  // S-decoding polynomial a_0..a_s

    bool is_real() const { return backend != CodeBackend::mock_smooth; }
    std::string id() const;
};

// Hadamard code over GF(2): coordinate indices are the vectors of F_2^k in
// lexicographic order (first message coordinate most significant). k <= 24.
CodeSpec hadamard_code(std::size_t k, const Rational& delta = Rational(1, 4));

// Matching-vector code over GF(2^t), t the order of 2 mod m. Coordinates are
// the points of Z_m^h in lexicographic order. q = |S| + 1.
CodeSpec matching_vector_code(const MatchingVectorFamily& fam, const Rational& delta);

CodeSpec mock_smooth_code(std::size_t k, std::size_t N, std::size_t q, const Rational& delta);

Json code_to_json(const CodeSpec& code);
CodeSpec code_from_json(const Json& j);

// Linear reconstruction: x_i = scaling * sum coefficients[l] * word[coordinates[l]].
struct QueryPlan {
    std::vector<std::size_t> coordinates;  // distinct, at most q
    std::vector<FieldElem> coefficients;
    FieldElem scaling = 1;
};

struct SDecodingPoly {
    std::vector<FieldElem> coefficients;  // a_0..a_s
};

using Message = std::vector<FieldElem>;
using Codeword = std::vector<FieldElem>;

Codeword encode(const CodeSpec& code, const Message& x);

// Size of the decoder randomness space; equals N for both real backends.
std::size_t randomness_size(const CodeSpec& code);

QueryPlan make_query_plan(const CodeSpec& code, std::size_t i, std::size_t w);

FieldElem evaluate_plan(const CodeSpec& code, const QueryPlan& plan, const Codeword& word);

// The linear functional over F^k computed by codeword coordinate j.
Message coordinate_functional(const CodeSpec& code, std::size_t j);

// Finds the decoder randomness whose query set equals D and returns its plan.
QueryPlan recover_query_plan(const CodeSpec& code, std::size_t i,
                             const std::vector<std::size_t>& D);

// P(x) = prod_{i in S} (x - g^i) / prod_{i in S} (1 - g^i): vanishes on
// {g^i : i in S} and P(1) = 1. Degree |S|.
SDecodingPoly s_decoding_polynomial(const FieldCtx& ctx, FieldElem g,
                                    const std::vector<std::uint32_t>& S);

FieldElem eval_poly(const FieldCtx& ctx, const std::vector<FieldElem>& coeffs, FieldElem x);

struct SmoothnessReport {
    bool smooth = false;
    bool marginals_uniform = false;
    bool always_correct = false;
    std::string detail;
};

// Exact check of both smoothness conditions: every query slot's marginal over
// the full randomness space is uniform on [N], and decoding is correct on
// uncorrupted codewords for every randomness. Randomness space must be
// enumerable (N <= 2^20).
SmoothnessReport check_perfect_smoothness(const CodeSpec& code);

// Marginal half of the check, reusable against synthetic decoders in tests.
bool query_marginals_uniform(std::size_t N, std::size_t k, std::size_t randomness,
                             const std::function<QueryPlan(std::size_t, std::size_t)>& plan_for,
                             std::string* detail = nullptr);

struct CorruptionReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    Rational rate;
};

// Random-corruption experiment: per trial, a random message, floor(delta*N)
// random coordinates flipped to random different symbols, and one decode.
// Bitwise deterministic under seed independent of the thread count.
CorruptionReport corruption_trial(const CodeSpec& code, const Rational& delta,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 1);

// A set D of at most q coordinates disjoint from U on which the decoder can
// reconstruct x_i (uniformly random q-subset of the complement for mock).
// Requires |U| <= delta*N.
std::vector<std::size_t> decode_avoiding(const CodeSpec& code, std::size_t i,
                                         const std::vector<std::size_t>& U, std::uint64_t seed);

Message random_message(const CodeSpec& code, RngStream& rng);

}  // namespace ncgap
