#pragma once

#include <cstdint>

namespace bbdec {

/// SplitMix64 step, used for seeding and stream splitting.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded via SplitMix64. Self-contained so that streams are
/// bit-identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) {
            word = splitmix64(sm);
        }
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

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n). Masked rejection keeps it unbiased and
    /// platform-independent.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) {
            return 0;
        }
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t v = next() & mask;
        while (v >= n) {
            v = next() & mask;
        }
        return v;
    }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

/// Per-shot substream derivation: hash(seed, stream, shot).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t shot) {
    std::uint64_t state = seed;
    std::uint64_t h = splitmix64(state);
    state = h ^ (stream * 0xd1342543de82ef95ULL);
    h = splitmix64(state);
    state = h ^ (shot * 0xaf251af3b0f025b5ULL);
    return splitmix64(state);
}

}  // namespace bbdec
