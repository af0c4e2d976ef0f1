#ifndef RANKFORGE_RNG_HPP
#define RANKFORGE_RNG_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace rankforge {

// SplitMix64 (Steele/Lea/Flood's mixing constants, as popularized by
// xoshiro's seeding routine). Chosen because it is tiny, fast, and has a
// trivially documented derivation rule, so every report in this project can
// say exactly how its random stream was produced.
//
// Derived streams: derive(seed, index) feeds both words through the mixer
// so that nearby indices give unrelated streams. This is the "hash(global
// seed, column index)" convention used by the shuffle generator and the
// per-trial streams of the verifiers.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Finalizer only: mixes a single word without advancing any state.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_state(std::uint64_t seed,
                                      std::uint64_t index) {
        return mix(seed) ^ mix(index + 0x9E3779B97F4A7C15ULL);
    }

    static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(derive_state(seed, index));
    }

    // Uniform in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform integer in the closed range [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    // Fisher-Yates permutation of {0, ..., n-1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(p[i - 1], p[below(i)]);
        return p;
    }

  private:
    std::uint64_t state_;
};

} // namespace rankforge

#endif
