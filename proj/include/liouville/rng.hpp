#pragma once

#include <cstdint>

namespace liouville {

// Counter-based generator: value = hash(seed, stream, counter). Stateless, so
// sampling shards by index range and merges without coordination, and identical
// (seed, stream, counter) always yields identical output on every platform.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t x = seed_;
        x = mix(x ^ (0x9e3779b97f4a7c15ULL + stream_));
        x = mix(x ^ (0xbf58476d1ce4e5b9ULL + counter));
        return mix(x);
    }

    // Uniform in [0,1) with 53 random bits; exactly representable as a double.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [-1,1).
    double uniform_pm1(std::uint64_t counter) const { return 2.0 * uniform01(counter) - 1.0; }

    CounterRng derived(std::uint64_t substream) const {
        return CounterRng(bits(0x5eedULL ^ substream), substream);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace liouville
