#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random number generation. Every draw is a pure function of
// (seed, counter), so parallel workers can sample any element of a stream
// without coordination and results do not depend on scheduling.
//
// The construction is fixed so that independent reimplementations reproduce
// the same streams bit for bit:
//   mix64:          the SplitMix64 finalizer (Steele/Lea/Flood constants)
//   uniform double: top 53 bits of the mixed word, offset to (0,1)
//   gaussian pair:  Box-Muller on two consecutive uniforms

namespace tpcodec {

constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-sensitive combiner for deriving stream seeds, e.g.
// hash_combine(master, snr_index, trial_id).
constexpr std::uint64_t hash_combine(std::uint64_t h) { return mix64(h); }

template <typename... Rest>
constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t next, Rest... rest) {
    return hash_combine(mix64(h) ^ next, rest...);
}

// Uniform double in the open interval (0,1): 53 mantissa bits plus a half-ulp
// offset so neither endpoint is reachable.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t bits = mix64(seed ^ mix64(counter));
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal pair from counters (2k, 2k+1) of the given stream.
inline void gaussian_pair(std::uint64_t seed, std::uint64_t pair_index, double& z0, double& z1) {
    const double u1 = uniform01(seed, 2 * pair_index);
    const double u2 = uniform01(seed, 2 * pair_index + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    z0 = r * std::cos(theta);
    z1 = r * std::sin(theta);
}

// Random-access standard normal: element `index` of stream `seed`.
inline double gaussian_at(std::uint64_t seed, std::uint64_t index) {
    double z0, z1;
    gaussian_pair(seed, index / 2, z0, z1);
    return (index % 2 == 0) ? z0 : z1;
}

// Sequential helper over the same counter construction, for places that just
// need a deterministic stream of words or bits.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return mix64(seed_ ^ mix64(counter_++)); }

    double next_uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    bool next_bit() { return (next_u64() & 1ULL) != 0; }

    // Uniform integer in [0, bound) by rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace tpcodec
