// Splittable pseudo-random streams: xoshiro256** seeded through splitmix64.
// Trial i of an experiment draws from derive(master_seed, i); streams are
// independent of each other and of the trial order.
#pragma once

#include <array>
#include <cstdint>

namespace netcon {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = detail::splitmix64(sm);
    }

    // Stream for (master seed, index); salt separates sub-streams of one trial
    // (e.g. initial-condition sampling vs. the run itself).
    static Rng stream(std::uint64_t master, std::uint64_t index, std::uint64_t salt = 0) {
        std::uint64_t sm = master;
        const std::uint64_t a = detail::splitmix64(sm);
        sm = a ^ (index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL * (salt + 1));
        return Rng(detail::splitmix64(sm));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, n) (Lemire multiply-shift with rejection).
    std::uint32_t bounded(std::uint32_t n) {
        std::uint64_t x = next() >> 32;
        std::uint64_t m = x * n;
        auto low = static_cast<std::uint32_t>(m);
        if (low < n) {
            const std::uint32_t threshold = (0u - n) % n;
            while (low < threshold) {
                x = next() >> 32;
                m = x * n;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() >> 63) != 0; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace netcon
