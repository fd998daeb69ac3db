#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace zkgl {

// Source of randomness for all sampling. Two modes:
//  - seeded: mt19937_64, bit-reproducible across platforms (tests, demos);
//  - os: the operating system entropy pool.
// Range reduction is done by rejection so seeded runs are portable and
// every draw is unbiased.
class RandomSource {
public:
    static RandomSource from_seed(uint64_t seed);
    static RandomSource from_os();

    uint64_t next_u64();

    // Unbiased draw in [0, bound); bound > 0.
    uint64_t uniform_below(uint64_t bound);

    // Unbiased draw in [lo, hi], inclusive.
    uint64_t uniform_range(uint64_t lo, uint64_t hi);

    // Single unbiased bit.
    int coin();

    bool deterministic() const { return seeded_; }

private:
    explicit RandomSource(uint64_t seed);
    RandomSource();

    void refill_os_buffer();

    bool seeded_;
    std::mt19937_64 gen_;
    unsigned char buf_[256];
    size_t pos_;
};

} // namespace zkgl
