#pragma once

#include <cstdint>
#include <vector>

namespace ncgap {

// Counter-based splittable PRNG (splitmix64 core). All randomness in the
// library flows from a single 64-bit seed through child() streams, so any
// subcomputation's stream can be reproduced in isolation and results do not
// depend on scheduling or thread count.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kGamma)) {}

    RngStream child(std::uint64_t label) const {
        return RngStream(from_state{}, mix(state_ ^ (kGamma * (label + 1))));
    }

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    // Unbiased uniform draw in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
        const std::uint64_t bound = 0 - rem;    // largest multiple of n
        std::uint64_t r = next();
        while (rem != 0 && r >= bound) r = next();
        return r % n;
    }

    // 53-bit uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    struct from_state {};
    RngStream(from_state, std::uint64_t s) : state_(s) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

}  // namespace ncgap
