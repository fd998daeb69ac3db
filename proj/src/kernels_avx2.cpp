// AVX2 variant of the u64acc matmul kernel. Compiled with -mavx2 in its
// own translation unit; callers gate on cpu_has_avx2().
//
// Precondition (checked by the dispatcher): fits_u64_accumulation(p, d),
// which implies every residue < 2^32, so _mm256_mul_epu32 computes the
// full 64-bit product and a row of dot products accumulates without
// overflow.

#if defined(ZKGL_WITH_AVX2)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace zkgl {

void matmul_avx2(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p) {
    for (size_t i = 0; i < d; ++i) {
        const uint64_t* arow = a + i * d;
        uint64_t* crow = c + i * d;
        size_t j = 0;
        for (; j + 4 <= d; j += 4) {
            __m256i acc = _mm256_setzero_si256();
            for (size_t k = 0; k < d; ++k) {
                __m256i aik = _mm256_set1_epi64x(static_cast<long long>(arow[k]));
                __m256i bkj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k * d + j));
                acc = _mm256_add_epi64(acc, _mm256_mul_epu32(aik, bkj));
            }
            alignas(32) uint64_t lane[4];
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane), acc);
            crow[j + 0] = lane[0] % p;
            crow[j + 1] = lane[1] % p;
            crow[j + 2] = lane[2] % p;
            crow[j + 3] = lane[3] % p;
        }
        for (; j < d; ++j) {
            uint64_t acc = 0;
            for (size_t k = 0; k < d; ++k) acc += arow[k] * b[k * d + j];
            crow[j] = acc % p;
        }
    }
}

} // namespace zkgl

#endif // ZKGL_WITH_AVX2
