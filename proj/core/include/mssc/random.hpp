#ifndef MSSC_RANDOM_HPP
#define MSSC_RANDOM_HPP

#include <cstdint>
#include <random>

namespace mssc {

/// SplitMix64 finalizer, used to derive seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/**
 * @brief Seedable, platform-independent random stream.
 *
 * Wraps `std::mt19937_64`, whose output sequence is fixed by the standard, and
 * implements its own bounded-integer and unit-interval mappings instead of the
 * implementation-defined standard distributions. Identical seeds give identical
 * streams on every platform.
 *
 * A RandomSource is owned by one search at a time.
 */
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// Independent stream for replication `index` of an experiment seeded with `master`.
    static RandomSource derive(std::uint64_t master, std::uint64_t index) {
        return RandomSource(splitmix64(splitmix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 1)));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection on the top of the range keeps the result unbiased.
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}

#endif
