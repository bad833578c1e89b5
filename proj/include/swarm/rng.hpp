#pragma once

#include <cstdint>

namespace swarm {

// Counter-based RNG. Every draw is a pure function of (seed, stream, counter),
// so runs are reproducible bit-for-bit and streams can be carved up without
// shared state. Stream discipline used across the project:
//   stream i in [0, N)      -> initial position of agent i
//                              (counters 2a, 2a+1 give attempt a's x, y),
//   stream kNoiseStream     -> per-step direction noise, one draw per agent
//                              in step-major, agent-minor order.
// Because agent i's initial draws never depend on N, the first min(N, N')
// agents of two runs with equal seeds coincide.

inline constexpr std::uint64_t kNoiseStream = std::uint64_t(1) << 56;

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

/// Uniform double in [0, 1) with 53 random mantissa bits.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(counter_bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                              double lo, double hi) {
    return lo + (hi - lo) * counter_uniform01(seed, stream, counter);
}

/// Convenience wrapper around one stream with an advancing counter.
class StreamRng {
  public:
    StreamRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    double uniform(double lo, double hi) { return counter_uniform(seed_, stream_, counter_++, lo, hi); }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

/// Replicate seed for sweep cell `cell`, replicate `rep`:
///   seed_base + splitmix64(cell << 32 | rep).
inline std::uint64_t replicate_seed(std::uint64_t seed_base, std::uint32_t cell, std::uint32_t rep) {
    return seed_base + splitmix64((static_cast<std::uint64_t>(cell) << 32) | rep);
}

}  // namespace swarm
