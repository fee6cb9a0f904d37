#include "ncgap/mvfamily.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncgap/field.hpp"

namespace ncgap {

namespace {

std::uint64_t inner_product_mod(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b, std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % m;
    }
    return acc;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (BigInt(k) > n) return 0;
    BigInt acc = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        acc = acc * (n - BigInt(j - 1)) / BigInt(j);
    }
    return acc;
}

// Smallest integer h with h^t >= v.
BigInt ceil_nth_root(const BigInt& v, unsigned t) {
    if (v <= 1) return v;
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, t) < v) hi <<= 1;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, t) >= v) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

}  // namespace

MatchingVectorFamily trivial_family(std::size_t n, std::uint64_t m) {
    if (n < 2) throw std::invalid_argument("trivial family needs n >= 2");
    if (m < 2) throw std::invalid_argument("trivial family needs m >= 2");
    MatchingVectorFamily fam;
    fam.m = m;
    fam.h = n;
    fam.S = {1};
    fam.U.assign(n, std::vector<std::uint32_t>(n, 0));
    fam.V.assign(n, std::vector<std::uint32_t>(n, 1));
    for (std::size_t i = 0; i < n; ++i) {
        fam.U[i][i] = 1;
        fam.V[i][i] = 0;
    }
    return fam;
}

FamilyCheck validate_family(const MatchingVectorFamily& fam) {
    FamilyCheck check;
    const std::size_t n = fam.size();
    if (fam.m < 2) return {false, "modulus m must be >= 2"};
    if (fam.V.size() != n) return {false, "U and V sizes differ"};
    for (std::size_t i = 0; i < n; ++i) {
        if (fam.U[i].size() != fam.h || fam.V[i].size() != fam.h)
            return {false, "vector dimension differs from h"};
    }
    std::vector<char> in_s(fam.m, 0);
    for (std::uint32_t s : fam.S) {
        if (s == 0 || s >= fam.m) return {false, "S contains 0 or out-of-range residue"};
        in_s[s] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t ip = inner_product_mod(fam.U[i], fam.V[j], fam.m);
            if (i == j && ip != 0) {
                return {false, "<u_" + std::to_string(i + 1) + ", v_" + std::to_string(i + 1) +
                                   "> = " + std::to_string(ip) + " != 0"};
            }
            if (i != j && !in_s[ip]) {
                return {false, "<u_" + std::to_string(i + 1) + ", v_" + std::to_string(j + 1) +
                                   "> = " + std::to_string(ip) + " not in S"};
            }
        }
    }
    return check;
}

std::vector<std::uint32_t> canonical_set(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    const auto primes = prime_factors(m);
    std::uint64_t prod = 1;
    for (std::uint64_t p : primes) prod *= p;
    if (prod != m) throw std::invalid_argument("m is not squarefree");
    std::vector<std::uint32_t> out;
    for (std::uint64_t s = 1; s < m; ++s) {
        bool ok = true;
        for (std::uint64_t p : primes) {
            if (s % p > 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(static_cast<std::uint32_t>(s));
    }
    return out;
}

std::vector<std::uint32_t> index_to_point(std::uint64_t index, std::uint64_t m, std::size_t h) {
    std::vector<std::uint32_t> z(h, 0);
    for (std::size_t i = h; i-- > 0;) {
        z[i] = static_cast<std::uint32_t>(index % m);
        index /= m;
    }
    return z;
}

std::uint64_t point_to_index(const std::vector<std::uint32_t>& z, std::uint64_t m) {
    std::uint64_t idx = 0;
    for (std::uint32_t c : z) idx = idx * m + c;
    return idx;
}

std::optional<MatchingVectorFamily> brute_force_family(std::uint64_t m, std::size_t h,
                                                       const std::vector<std::uint32_t>& S,
                                                       std::size_t target_n, std::uint64_t budget,
                                                       BruteForceStats* stats) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    double space = 1;
    for (std::size_t i = 0; i < h; ++i) space *= static_cast<double>(m);
    if (space > 1e6) throw ResourceLimitError("m^h exceeds the brute-force cap of 10^6");
    const std::uint64_t num_points = [&] {
        std::uint64_t acc = 1;
        for (std::size_t i = 0; i < h; ++i) acc *= m;
        return acc;
    }();

    std::vector<std::vector<std::uint32_t>> points(num_points);
    for (std::uint64_t idx = 0; idx < num_points; ++idx) points[idx] = index_to_point(idx, m, h);

    std::vector<char> in_s(m, 0);
    for (std::uint32_t s : S) {
        if (s == 0 || s >= m) throw std::invalid_argument("S contains 0 or out-of-range residue");
        in_s[s] = 1;
    }

    BruteForceStats local;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chosen;  // (u index, v index)

    // Pair order is lexicographic over (u, v); the family conditions are
    // invariant under permutation, so requiring strictly increasing pairs
    // only removes duplicate orderings from the search.
    auto compatible = [&](std::uint64_t ui, std::uint64_t vi) {
        if (inner_product_mod(points[ui], points[vi], m) != 0) return false;
        for (const auto& [uj, vj] : chosen) {
            if (!in_s[inner_product_mod(points[ui], points[vj], m)]) return false;
            if (!in_s[inner_product_mod(points[uj], points[vi], m)]) return false;
        }
        return true;
    };

    bool exhausted = false;
    auto search = [&](auto&& self, std::uint64_t start) -> bool {
        if (chosen.size() >= target_n) return true;
        for (std::uint64_t pair = start; pair < num_points * num_points; ++pair) {
            if (++local.candidates_examined > budget) {
                exhausted = true;
                return false;
            }
            const std::uint64_t ui = pair / num_points;
            const std::uint64_t vi = pair % num_points;
            if (!compatible(ui, vi)) continue;
            chosen.emplace_back(ui, vi);
            if (self(self, pair + 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    };

    const bool found = search(search, 0);
    local.budget_exhausted = exhausted;
    if (stats != nullptr) *stats = local;
    if (!found) return std::nullopt;

    MatchingVectorFamily fam;
    fam.m = m;
    fam.h = h;
    fam.S = S;
    std::sort(fam.S.begin(), fam.S.end());
    for (const auto& [ui, vi] : chosen) {
        fam.U.push_back(points[ui]);
        fam.V.push_back(points[vi]);
    }
    return fam;
}

MvParameters mv_parameters(std::uint64_t k, unsigned t) {
    if (k < 2 || t < 2) throw std::invalid_argument("mv_parameters needs k >= 2 and t >= 2");
    MvParameters out;
    out.k = k;
    out.t = t;

    // minimal integer c whose interval [(c/2) t ln t, c t ln t] holds t odd primes
    const double tlnt = t * std::log(static_cast<double>(t));
    for (unsigned c = 1;; ++c) {
        const double lo = c * tlnt / 2.0;
        const double hi = c * tlnt;
        std::vector<std::uint64_t> primes;
        for (std::uint64_t p = 3; static_cast<double>(p) <= hi && primes.size() < t; p += 2) {
            if (static_cast<double>(p) >= lo && is_prime_u64(p)) primes.push_back(p);
        }
        if (primes.size() >= t) {
            out.interval_constant = c;
            out.primes = primes;
            break;
        }
        if (c > 1000000) throw std::logic_error("prime interval search failed");
    }

    out.m = 1;
    for (std::uint64_t p : out.primes) out.m *= p;

    // smallest multiple w of t with w^(w/t) >= k
    for (std::uint64_t w = t;; w += t) {
        if (boost::multiprecision::pow(BigInt(w), static_cast<unsigned>(w / t)) >= k) {
            out.w = w;
            break;
        }
    }

    // minimal e_i with p_i^{e_i} > w^{1/t}, compared exactly as p_i^{e_i t} > w
    out.d = 0;
    for (std::uint64_t p : out.primes) {
        unsigned e = 1;
        while (boost::multiprecision::pow(BigInt(p), e * t) <= out.w) ++e;
        out.exponents.push_back(e);
        const BigInt pe = boost::multiprecision::pow(BigInt(p), e);
        if (pe > out.d) out.d = pe;
    }

    // h = ceil(c' w^{1+1/t}) via the exact t-th root: smallest h with h^t >= (c' w)^t w
    for (unsigned cp = 1;; ++cp) {
        const BigInt x = BigInt(cp) * out.w;
        const BigInt h = ceil_nth_root(boost::multiprecision::pow(x, t) * out.w, t);
        if (h >= out.d) {
            out.h_constant = cp;
            out.h = h;
            break;
        }
    }

    const std::uint64_t d64 = out.d.convert_to<std::uint64_t>();
    out.binom_h_le_d = 0;
    BigInt term = 1;  // C(h, 0)
    for (std::uint64_t j = 0; j <= d64; ++j) {
        out.binom_h_le_d += term;
        term = term * (out.h - BigInt(j)) / BigInt(j + 1);
    }
    out.binom_h_w = binomial(out.h, out.w);

    const double log10_m = std::log10(out.m.convert_to<double>());
    // digits(N) ~ binom * log10(m); compare without materializing
    out.exceeds_2pow64_digits =
        out.binom_h_le_d.convert_to<double>() > std::ldexp(1.0, 64) / log10_m;
    const BigInt bit_cap = 1000000;
    const unsigned m_bits = static_cast<unsigned>(boost::multiprecision::msb(out.m)) + 1;
    if (out.binom_h_le_d * m_bits <= bit_cap) {
        out.n_materialized = true;
        out.predicted_n =
            boost::multiprecision::pow(out.m, out.binom_h_le_d.convert_to<unsigned>());
    }

    const BigInt padded_k = boost::multiprecision::pow(BigInt(out.w), static_cast<unsigned>(out.w / t));
    out.padding_blowup = Rational(padded_k, BigInt(k));
    return out;
}

Json family_to_json(const MatchingVectorFamily& fam) {
    Json j;
    j["m"] = fam.m;
    j["h"] = fam.h;
    j["S"] = fam.S;
    j["U"] = fam.U;
    j["V"] = fam.V;
    return j;
}

MatchingVectorFamily family_from_json(const Json& j) {
    MatchingVectorFamily fam;
    fam.m = j.at("m").get<std::uint64_t>();
    fam.h = j.at("h").get<std::size_t>();
    fam.S = j.at("S").get<std::vector<std::uint32_t>>();
    fam.U = j.at("U").get<std::vector<std::vector<std::uint32_t>>>();
    fam.V = j.at("V").get<std::vector<std::vector<std::uint32_t>>>();
    return fam;
}

}  // namespace ncgap
