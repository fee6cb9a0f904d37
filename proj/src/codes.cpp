#include "ncgap/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ncgap {

namespace {

constexpr std::size_t kHadamardKCap = 24;
constexpr std::size_t kEnumerableRandomness = std::size_t{1} << 20;

void require_real(const CodeSpec& code, const char* op) {
    if (!code.is_real())
        throw std::invalid_argument(std::string(op) + ": mock_smooth is not a real code");
}

std::size_t hadamard_unit_mask(std::size_t k, std::size_t i) {
    return std::size_t{1} << (k - 1 - i);
}

// |U| <= delta*N, exact.
bool within_radius(std::size_t used, const Rational& delta, std::size_t N) {
    return Rational(used) <= delta * Rational(N);
}

std::uint64_t floor_mul(const Rational& delta, std::size_t N) {
    const BigInt num = numerator(delta) * N;
    return BigInt(num / denominator(delta)).convert_to<std::uint64_t>();
}

std::vector<std::uint32_t> add_points(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b, std::uint64_t m,
                                      std::uint32_t scale) {
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(
            (a[i] + static_cast<std::uint64_t>(scale) * b[i]) % m);
    }
    return out;
}

std::uint64_t inner_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % m;
    }
    return acc;
}

}  // namespace

std::string CodeSpec::id() const {
    switch (backend) {
        case CodeBackend::hadamard:
            return "hadamard:k=" + std::to_string(k);
        case CodeBackend::matching_vector:
            return "mv:m=" + std::to_string(family.m) + ",h=" + std::to_string(family.h) +
                   ",n=" + std::to_string(family.size());
        case CodeBackend::mock_smooth:
            return "mock:k=" + std::to_string(k) + ",N=" + std::to_string(N) +
                   ",q=" + std::to_string(q);
    }
    return "?";
}

CodeSpec hadamard_code(std::size_t k, const Rational& delta) {
    if (k < 1 || k > kHadamardKCap)
        throw std::invalid_argument("hadamard message length must be in [1, 24]");
    CodeSpec code;
    code.backend = CodeBackend::hadamard;
    code.k = k;
    code.N = std::size_t{1} << k;
    code.q = 2;
    if (delta < 0 || delta * Rational(code.q) >= 1)
        throw std::invalid_argument("decoding radius must satisfy 0 <= delta < 1/q");
    code.delta = delta;
    code.epsilon = delta * Rational(code.q);
    code.field = make_field(1);
    return code;
}

CodeSpec matching_vector_code(const MatchingVectorFamily& fam, const Rational& delta) {
    const FamilyCheck check = validate_family(fam);
    if (!check.ok) throw std::invalid_argument("invalid matching vector family: " + check.violation);
    if (fam.m % 2 == 0) throw std::invalid_argument("matching vector code needs odd m");
    CodeSpec code;
    code.backend = CodeBackend::matching_vector;
    code.family = fam;
    code.k = fam.size();
    code.q = fam.S.size() + 1;
    if (delta < 0 || delta * Rational(code.q) >= 1)
        throw std::invalid_argument("decoding radius must satisfy 0 <= delta < 1/q");
    code.delta = delta;
    code.epsilon = delta * Rational(code.q);

    const unsigned t = order_of_two_mod(fam.m);
    code.field = make_field(t);
    code.generator = find_subgroup_generator(code.field, fam.m);
    code.decode_poly = s_decoding_polynomial(code.field, code.generator, fam.S).coefficients;

    double size = 1;
    std::size_t n = 1;
    for (std::size_t i = 0; i < fam.h; ++i) {
        size *= static_cast<double>(fam.m);
        n *= fam.m;
    }
    if (size > 1e12) throw ResourceLimitError("codeword length m^h too large");
    code.N = n;
    return code;
}

CodeSpec mock_smooth_code(std::size_t k, std::size_t N, std::size_t q, const Rational& delta) {
    if (k < 1 || N < 1 || q < 1) throw std::invalid_argument("mock code needs k, N, q >= 1");
    if (q > N) throw std::invalid_argument("mock code needs q <= N");
    CodeSpec code;
    code.backend = CodeBackend::mock_smooth;
    code.k = k;
    code.N = N;
    code.q = q;
    if (delta < 0 || delta * Rational(q) >= 1)
        throw std::invalid_argument("decoding radius must satisfy 0 <= delta < 1/q");
    code.delta = delta;
    code.epsilon = delta * Rational(q);
    code.field = make_field(1);
    return code;
}

Json code_to_json(const CodeSpec& code) {
    Json j;
    switch (code.backend) {
        case CodeBackend::hadamard:
            j["backend"] = "hadamard";
            j["k"] = code.k;
            break;
        case CodeBackend::matching_vector:
            j["backend"] = "matching_vector";
            j["family"] = family_to_json(code.family);
            break;
        case CodeBackend::mock_smooth:
            j["backend"] = "mock_smooth";
            j["k"] = code.k;
            j["N"] = code.N;
            j["q"] = code.q;
            break;
    }
    j["delta"] = rational_to_json(code.delta);
    return j;
}

CodeSpec code_from_json(const Json& j) {
    const std::string backend = j.at("backend").get<std::string>();
    const Rational delta = rational_from_json(j.at("delta"));
    if (backend == "hadamard") return hadamard_code(j.at("k").get<std::size_t>(), delta);
    if (backend == "matching_vector")
        return matching_vector_code(family_from_json(j.at("family")), delta);
    if (backend == "mock_smooth")
        return mock_smooth_code(j.at("k").get<std::size_t>(), j.at("N").get<std::size_t>(),
                                j.at("q").get<std::size_t>(), delta);
    throw std::invalid_argument("unknown code backend: " + backend);
}

Codeword encode(const CodeSpec& code, const Message& x) {
    require_real(code, "encode");
    if (x.size() != code.k) throw std::invalid_argument("message length mismatch");
    for (FieldElem v : x) {
        if (!code.field.contains(v)) throw std::invalid_argument("message symbol out of field");
    }
    Codeword y(code.N, 0);
    if (code.backend == CodeBackend::hadamard) {
        std::size_t x_mask = 0;
        for (std::size_t t = 0; t < code.k; ++t) {
            if (x[t]) x_mask |= hadamard_unit_mask(code.k, t);
        }
        for (std::size_t a = 0; a < code.N; ++a) {
            y[a] = static_cast<FieldElem>(__builtin_parityll(a & x_mask));
        }
        return y;
    }
    const auto& fam = code.family;
    std::vector<std::uint32_t> z(fam.h, 0);
    for (std::size_t idx = 0; idx < code.N; ++idx) {
        FieldElem acc = 0;
        for (std::size_t j = 0; j < code.k; ++j) {
            if (x[j] == 0) continue;
            const FieldElem coord = code.field.pow(code.generator, inner_mod(fam.U[j], z, fam.m));
            acc = code.field.add(acc, code.field.mul(x[j], coord));
        }
        y[idx] = acc;
        // advance z through Z_m^h in lexicographic order
        for (std::size_t p = fam.h; p-- > 0;) {
            if (++z[p] < fam.m) break;
            z[p] = 0;
        }
    }
    return y;
}

std::size_t randomness_size(const CodeSpec& code) {
    require_real(code, "randomness_size");
    return code.N;
}

QueryPlan make_query_plan(const CodeSpec& code, std::size_t i, std::size_t w) {
    require_real(code, "make_query_plan");
    if (i >= code.k) throw std::invalid_argument("message index out of range");
    if (w >= randomness_size(code)) throw std::invalid_argument("randomness out of range");
    QueryPlan plan;
    if (code.backend == CodeBackend::hadamard) {
        plan.coordinates = {w, w ^ hadamard_unit_mask(code.k, i)};
        plan.coefficients = {1, 1};
        plan.scaling = 1;
        return plan;
    }
    const auto& fam = code.family;
    const auto wp = index_to_point(w, fam.m, fam.h);
    const std::size_t s = fam.S.size();
    for (std::size_t l = 0; l <= s; ++l) {
        const auto pt = add_points(wp, fam.V[i], fam.m, static_cast<std::uint32_t>(l));
        plan.coordinates.push_back(point_to_index(pt, fam.m));
        plan.coefficients.push_back(code.decode_poly[l]);
    }
    auto sorted = plan.coordinates;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("degenerate v_i: decoder queries are not distinct");
    const std::uint64_t e = inner_mod(fam.U[i], wp, fam.m);
    plan.scaling = code.field.pow_mod_order(code.generator, -static_cast<std::int64_t>(e), fam.m);
    return plan;
}

FieldElem evaluate_plan(const CodeSpec& code, const QueryPlan& plan, const Codeword& word) {
    FieldElem acc = 0;
    for (std::size_t l = 0; l < plan.coordinates.size(); ++l) {
        if (plan.coordinates[l] >= word.size())
            throw std::invalid_argument("plan coordinate out of range");
        acc = code.field.add(acc, code.field.mul(plan.coefficients[l], word[plan.coordinates[l]]));
    }
    return code.field.mul(plan.scaling, acc);
}

Message coordinate_functional(const CodeSpec& code, std::size_t j) {
    require_real(code, "coordinate_functional");
    if (j >= code.N) throw std::invalid_argument("coordinate out of range");
    Message row(code.k, 0);
    if (code.backend == CodeBackend::hadamard) {
        for (std::size_t t = 0; t < code.k; ++t) {
            row[t] = (j & hadamard_unit_mask(code.k, t)) ? 1 : 0;
        }
        return row;
    }
    const auto& fam = code.family;
    const auto z = index_to_point(j, fam.m, fam.h);
    for (std::size_t t = 0; t < code.k; ++t) {
        row[t] = code.field.pow(code.generator, inner_mod(fam.U[t], z, fam.m));
    }
    return row;
}

QueryPlan recover_query_plan(const CodeSpec& code, std::size_t i,
                             const std::vector<std::size_t>& D) {
    require_real(code, "recover_query_plan");
    std::vector<std::size_t> want(D);
    std::sort(want.begin(), want.end());
    for (std::size_t cand : D) {
        QueryPlan plan = make_query_plan(code, i, cand);
        auto got = plan.coordinates;
        std::sort(got.begin(), got.end());
        if (got == want) return plan;
    }
    throw std::invalid_argument("no decoder randomness produces the requested query set");
}

SDecodingPoly s_decoding_polynomial(const FieldCtx& ctx, FieldElem g,
                                    const std::vector<std::uint32_t>& S) {
    SDecodingPoly poly;
    poly.coefficients = {1};
    FieldElem norm = 1;
    for (std::uint32_t i : S) {
        if (i == 0) throw std::invalid_argument("0 must not be in S");
        const FieldElem gi = ctx.pow(g, i);
        if (gi == 1) throw std::invalid_argument("g^i = 1 for some i in S");
        // multiply by (x + g^i); subtraction equals addition in characteristic 2
        std::vector<FieldElem> next(poly.coefficients.size() + 1, 0);
        for (std::size_t d = 0; d < poly.coefficients.size(); ++d) {
            next[d + 1] = ctx.add(next[d + 1], poly.coefficients[d]);
            next[d] = ctx.add(next[d], ctx.mul(poly.coefficients[d], gi));
        }
        poly.coefficients = std::move(next);
        norm = ctx.mul(norm, ctx.add(1, gi));
    }
    const FieldElem scale = ctx.inv(norm);
    for (FieldElem& c : poly.coefficients) c = ctx.mul(c, scale);
    return poly;
}

FieldElem eval_poly(const FieldCtx& ctx, const std::vector<FieldElem>& coeffs, FieldElem x) {
    FieldElem acc = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        acc = ctx.add(ctx.mul(acc, x), coeffs[d]);
    }
    return acc;
}

bool query_marginals_uniform(std::size_t N, std::size_t k, std::size_t randomness,
                             const std::function<QueryPlan(std::size_t, std::size_t)>& plan_for,
                             std::string* detail) {
    if (randomness % N != 0) {
        if (detail != nullptr) *detail = "randomness space size is not a multiple of N";
        return false;
    }
    const std::size_t expected = randomness / N;
    std::vector<std::size_t> counts(N, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t slots = plan_for(i, 0).coordinates.size();
        for (std::size_t slot = 0; slot < slots; ++slot) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t w = 0; w < randomness; ++w) {
                ++counts[plan_for(i, w).coordinates[slot]];
            }
            for (std::size_t c = 0; c < N; ++c) {
                if (counts[c] != expected) {
                    if (detail != nullptr) {
                        *detail = "marginal of query slot " + std::to_string(slot) +
                                  " for index " + std::to_string(i + 1) +
                                  " is not uniform (coordinate " + std::to_string(c) +
                                  " hit " + std::to_string(counts[c]) + " times, expected " +
                                  std::to_string(expected) + ")";
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

SmoothnessReport check_perfect_smoothness(const CodeSpec& code) {
    require_real(code, "check_perfect_smoothness");
    const std::size_t R = randomness_size(code);
    if (R > kEnumerableRandomness)
        throw ResourceLimitError("randomness space too large to enumerate");

    SmoothnessReport report;
    report.marginals_uniform = query_marginals_uniform(
        code.N, code.k, R,
        [&](std::size_t i, std::size_t w) { return make_query_plan(code, i, w); },
        &report.detail);

    // test messages: exhaustive when the message space is small, otherwise
    // unit vectors plus a fixed random sample
    std::vector<Message> messages;
    const double space = std::pow(static_cast<double>(code.field.order()),
                                  static_cast<double>(code.k));
    if (space <= 4096.0) {
        const std::size_t total = static_cast<std::size_t>(space);
        for (std::size_t m = 0; m < total; ++m) {
            Message x(code.k, 0);
            std::size_t v = m;
            for (std::size_t t = 0; t < code.k; ++t) {
                x[t] = static_cast<FieldElem>(v % code.field.order());
                v /= code.field.order();
            }
            messages.push_back(std::move(x));
        }
    } else {
        for (std::size_t i = 0; i < code.k; ++i) {
            Message x(code.k, 0);
            x[i] = 1;
            messages.push_back(std::move(x));
        }
        RngStream rng(0x5eedULL);
        for (int s = 0; s < 64; ++s) messages.push_back(random_message(code, rng));
    }

    report.always_correct = true;
    for (const Message& x : messages) {
        const Codeword y = encode(code, x);
        for (std::size_t i = 0; i < code.k && report.always_correct; ++i) {
            for (std::size_t w = 0; w < R; ++w) {
                if (evaluate_plan(code, make_query_plan(code, i, w), y) != x[i]) {
                    report.always_correct = false;
                    report.detail = "decoder incorrect at i=" + std::to_string(i + 1) +
                                    ", w=" + std::to_string(w);
                    break;
                }
            }
        }
        if (!report.always_correct) break;
    }
    report.smooth = report.marginals_uniform && report.always_correct;
    return report;
}

CorruptionReport corruption_trial(const CodeSpec& code, const Rational& delta,
                                  std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    require_real(code, "corruption_trial");
    if (delta * Rational(code.q) >= 1 || delta < 0)
        throw std::invalid_argument("corruption level must satisfy 0 <= delta < 1/q");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    const std::uint64_t corrupt_count = floor_mul(delta, code.N);
    const std::size_t R = randomness_size(code);
    const std::uint64_t field_order = code.field.order();
    const RngStream base = RngStream(seed).child(0x7261696Cu);  // trial stream root

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        std::uint64_t failures = 0;
        std::vector<std::size_t> corrupted;
        for (std::uint64_t t = lo; t < hi; ++t) {
            RngStream rng = base.child(t);
            const Message x = random_message(code, rng);
            Codeword y = encode(code, x);
            corrupted.clear();
            // Floyd's sampling: uniform subset of size corrupt_count
            for (std::uint64_t j = code.N - corrupt_count; j < code.N; ++j) {
                const std::uint64_t r = rng.below(j + 1);
                const bool seen = std::find(corrupted.begin(), corrupted.end(),
                                            static_cast<std::size_t>(r)) != corrupted.end();
                corrupted.push_back(static_cast<std::size_t>(seen ? j : r));
            }
            for (std::size_t c : corrupted) {
                const FieldElem offset = static_cast<FieldElem>(1 + rng.below(field_order - 1));
                y[c] = code.field.add(y[c], offset);
            }
            const std::size_t i = static_cast<std::size_t>(rng.below(code.k));
            const std::size_t w = static_cast<std::size_t>(rng.below(R));
            if (evaluate_plan(code, make_query_plan(code, i, w), y) != x[i]) ++failures;
        }
        return failures;
    };

    CorruptionReport report;
    report.trials = trials;
    if (threads <= 1) {
        report.failures = run_range(0, trials);
    } else {
        const unsigned n = std::min<std::uint64_t>(threads, trials);
        std::vector<std::uint64_t> partial(n, 0);
        std::vector<std::thread> pool;
        for (unsigned p = 0; p < n; ++p) {
            const std::uint64_t lo = trials * p / n;
            const std::uint64_t hi = trials * (p + 1) / n;
            pool.emplace_back([&, p, lo, hi] { partial[p] = run_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t f : partial) report.failures += f;
    }
    report.rate = Rational(report.failures, report.trials);
    return report;
}

std::vector<std::size_t> decode_avoiding(const CodeSpec& code, std::size_t i,
                                         const std::vector<std::size_t>& U, std::uint64_t seed) {
    if (i >= code.k) throw std::invalid_argument("message index out of range");
    if (!within_radius(U.size(), code.delta, code.N))
        throw std::invalid_argument("|U| exceeds delta*N");
    std::vector<char> used(code.N, 0);
    for (std::size_t u : U) {
        if (u >= code.N) throw std::invalid_argument("U contains an out-of-range coordinate");
        used[u] = 1;
    }
    RngStream rng(seed);

    if (code.backend == CodeBackend::mock_smooth) {
        std::vector<std::size_t> avail;
        avail.reserve(code.N - U.size());
        for (std::size_t c = 0; c < code.N; ++c) {
            if (!used[c]) avail.push_back(c);
        }
        if (avail.size() < code.q)
            throw std::invalid_argument("fewer than q coordinates remain outside U");
        for (std::size_t j = 0; j < code.q; ++j) {
            const std::size_t pick = j + static_cast<std::size_t>(rng.below(avail.size() - j));
            std::swap(avail[j], avail[pick]);
        }
        std::vector<std::size_t> D(avail.begin(), avail.begin() + code.q);
        std::sort(D.begin(), D.end());
        return D;
    }

    const std::size_t R = randomness_size(code);
    auto try_w = [&](std::size_t w) -> std::vector<std::size_t> {
        const QueryPlan plan = make_query_plan(code, i, w);
        for (std::size_t c : plan.coordinates) {
            if (used[c]) return {};
        }
        std::vector<std::size_t> D = plan.coordinates;
        std::sort(D.begin(), D.end());
        return D;
    };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto D = try_w(static_cast<std::size_t>(rng.below(R)));
        if (!D.empty()) return D;
    }
    for (std::size_t w = 0; w < R; ++w) {  // deterministic fallback
        auto D = try_w(w);
        if (!D.empty()) return D;
    }
    throw std::runtime_error("decode_avoiding: no randomness avoids U (smoothness violated)");
}

Message random_message(const CodeSpec& code, RngStream& rng) {
    Message x(code.k);
    for (std::size_t t = 0; t < code.k; ++t) {
        x[t] = static_cast<FieldElem>(rng.below(code.field.order()));
    }
    return x;
}

}  // namespace ncgap
