#pragma once

#include <cstdint>

#include "tcm/rational.hpp"

namespace tcm {

// Default seed for every statistical suite in the library and CLI.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// xorshift64* — small, seedable, and identical on every platform, which
// is what keeps the verification suites bit-reproducible.
class Xorshift64 {
  public:
    explicit Xorshift64(std::uint64_t seed = kDefaultSeed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // [lo, hi]
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Random rational in [-2, 2) with denominator <= max_den.
    Rat rat(std::int64_t max_den = 64) {
        std::int64_t q = range(1, max_den);
        std::int64_t p = range(-2 * q, 2 * q - 1);
        return Rat(p, q);
    }

    // Random torus coordinate in [-1, 1).
    Rat torus_coord(std::int64_t max_den = 64) {
        std::int64_t q = range(1, max_den);
        std::int64_t p = range(-q, q - 1);
        return Rat(p, q);
    }

  private:
    std::uint64_t state_;
};

} // namespace tcm
