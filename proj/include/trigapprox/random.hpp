// Seeded generator with a fixed algorithm (splitmix64) so that identical
// seeds give identical streams on every platform; the harness determinism
// contract depends on this, std::uniform_real_distribution does not provide
// it.

#pragma once

#include <cstdint>

namespace trigapprox {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    // decorrelated child seed for substreams (member i of a sweep, etc.)
    std::uint64_t fork(std::uint64_t salt) const {
        SplitMix64 mixer(state_ ^ (salt * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL));
        return mixer.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace trigapprox
