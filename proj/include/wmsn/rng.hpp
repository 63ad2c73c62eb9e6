#pragma once

#include <cstdint>

namespace wmsn {

/**
 * SplitMix64 generator (Steele, Lea & Flood; the java.util.SplittableRandom
 * mixer). 64-bit state advanced by the golden-gamma constant, output mixed by
 * two xor-multiply rounds. Chosen for platform-independent, byte-reproducible
 * sequences from a 64-bit seed.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

private:
    std::uint64_t state_;
};

}  // namespace wmsn
