#pragma once

#include <cstdint>

namespace gmorder {

// SplitMix64 (Steele, Lea & Flood). A 64-bit counter-based generator whose
// output depends only on the seed and the draw index, so every platform
// produces the same stream. Substreams for independent trials are derived
// with substream(seed, k) = seed ^ (k * kStreamStride).
class Rng {
public:
    static constexpr std::uint64_t kStreamStride = 0x9E3779B97F4A7C15ULL;

    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t substream(std::uint64_t seed, std::uint64_t k) {
        return seed ^ (k * kStreamStride);
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace gmorder
