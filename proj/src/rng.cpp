#include "zkgl/rng.hpp"

#include <cstring>

#include "zkgl/errors.hpp"

#if defined(__linux__) || defined(__APPLE__)
#include <sys/random.h>
#define ZKGL_HAVE_GETENTROPY 1
#endif

namespace zkgl {

RandomSource::RandomSource(uint64_t seed) : seeded_(true), gen_(seed), pos_(sizeof(buf_)) {}

RandomSource::RandomSource() : seeded_(false), gen_(0), pos_(sizeof(buf_)) {}

RandomSource RandomSource::from_seed(uint64_t seed) { return RandomSource(seed); }

RandomSource RandomSource::from_os() { return RandomSource(); }

void RandomSource::refill_os_buffer() {
#if defined(ZKGL_HAVE_GETENTROPY)
    size_t off = 0;
    while (off < sizeof(buf_)) {
        size_t chunk = sizeof(buf_) - off;
        if (chunk > 256) chunk = 256;
        if (getentropy(buf_ + off, chunk) != 0)
            raise(Errc::IoError, "getentropy failed");
        off += chunk;
    }
#else
    std::random_device rd;
    for (size_t i = 0; i + sizeof(unsigned) <= sizeof(buf_); i += sizeof(unsigned)) {
        unsigned v = rd();
        std::memcpy(buf_ + i, &v, sizeof(v));
    }
#endif
    pos_ = 0;
}

uint64_t RandomSource::next_u64() {
    if (seeded_) return gen_();
    if (pos_ + 8 > sizeof(buf_)) refill_os_buffer();
    uint64_t v;
    std::memcpy(&v, buf_ + pos_, 8);
    pos_ += 8;
    return v;
}

uint64_t RandomSource::uniform_below(uint64_t bound) {
    if (bound == 0) raise(Errc::InvalidArgument, "uniform_below(0)");
    // Values >= 2^64 mod bound form a whole number of size-`bound` blocks.
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

uint64_t RandomSource::uniform_range(uint64_t lo, uint64_t hi) {
    if (lo > hi) raise(Errc::InvalidArgument, "uniform_range: lo > hi");
    uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64(); // full 64-bit range
    return lo + uniform_below(span);
}

int RandomSource::coin() { return static_cast<int>(uniform_below(2)); }

} // namespace zkgl
