#pragma once

#include <cstdint>

namespace hdx {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the whole state
/// transition fits in three lines and is trivial to port, which keeps seeded
/// walks reproducible across implementations:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived quantities:
///   uniform01()      = (next() >> 11) * 2^-53
///   uniform_index(n) = r % n for the first r = next() with r >= (2^64 - n) % n
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    constexpr std::uint64_t operator()() noexcept { return next(); }
    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Unbiased draw from [0, n); n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) noexcept {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % n;
            }
        }
    }

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Seed of the index-th member of a batch, independent of scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(seed ^ SplitMix64::mix(index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace hdx
