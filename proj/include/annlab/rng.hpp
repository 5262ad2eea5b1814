#pragma once

#include <cstdint>

namespace annlab {

/// Counter-based pseudo-random stream (splitmix64 over an affine counter).
/// Every consumer owns its stream: identical (seed, stream) pairs give
/// bitwise-identical sequences on every platform.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ 0x8f462907'35a4e4cbULL) ^ mix(stream * 0xd2b74407'b1ce6e93ULL + 1)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b9'7f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [0, bound); bound > 0. Unbiased (rejection).
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d'1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb'133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace annlab
