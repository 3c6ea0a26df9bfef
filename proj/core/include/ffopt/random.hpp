#pragma once

// Seeded random source with a pinned, versioned algorithm ("ffopt-rng-1")
// so runs are reproducible across builds and other-language ports can
// match our streams draw for draw:
//
//   state:    xoshiro256++ 1.0 (Blackman & Vigna), state initialized by
//             feeding the 64-bit seed through SplitMix64 four times
//   uniform:  next_u64() >> 11, scaled by 2^-53  ->  double in [0, 1)
//   normal:   Box-Muller on two fresh uniforms; the second variate is
//             cached and returned by the next call
//
// Identical seed => identical stream. Copying a RandomSource clones the
// stream (useful for lookahead in tests).

#include <cstdint>

namespace ffopt {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) {
            // SplitMix64 step
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal, mean 0 variance 1
    double next_normal();

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ffopt
