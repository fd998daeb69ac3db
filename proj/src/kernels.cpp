#include "zkgl/kernels.hpp"

#include <limits>

namespace zkgl {

#if defined(ZKGL_WITH_AVX2)
void matmul_avx2(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p);
#endif

namespace {

std::string g_forced; // empty = automatic

} // namespace

bool fits_u64_accumulation(uint64_t p, size_t d) {
    if (d == 0) return true;
    uint64_t r = p - 1;
    if (r >= (1ull << 32)) return false;
    unsigned __int128 worst = static_cast<unsigned __int128>(r) * r * d;
    return worst <= static_cast<unsigned __int128>(std::numeric_limits<uint64_t>::max());
}

bool cpu_has_avx2() {
#if defined(ZKGL_WITH_AVX2)
    static const bool yes = __builtin_cpu_supports("avx2");
    return yes;
#else
    return false;
#endif
}

void matmul_generic(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p) {
    for (size_t i = 0; i < d; ++i) {
        const uint64_t* arow = a + i * d;
        uint64_t* crow = c + i * d;
        for (size_t j = 0; j < d; ++j) {
            unsigned __int128 acc = 0;
            for (size_t k = 0; k < d; ++k) {
                acc += static_cast<unsigned __int128>(arow[k]) * b[k * d + j];
                acc %= p;
            }
            crow[j] = static_cast<uint64_t>(acc);
        }
    }
}

void matmul_u64acc(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p) {
    for (size_t i = 0; i < d; ++i) {
        const uint64_t* arow = a + i * d;
        uint64_t* crow = c + i * d;
        for (size_t j = 0; j < d; ++j) crow[j] = 0;
        for (size_t k = 0; k < d; ++k) {
            uint64_t aik = arow[k];
            const uint64_t* brow = b + k * d;
            for (size_t j = 0; j < d; ++j) crow[j] += aik * brow[j];
        }
        for (size_t j = 0; j < d; ++j) crow[j] %= p;
    }
}

std::vector<MatmulKernel> applicable_matmul_kernels(uint64_t p, size_t d) {
    std::vector<MatmulKernel> out;
    out.push_back({"generic", &matmul_generic});
    if (fits_u64_accumulation(p, d)) {
        out.push_back({"u64acc", &matmul_u64acc});
#if defined(ZKGL_WITH_AVX2)
        if (cpu_has_avx2()) out.push_back({"avx2", &matmul_avx2});
#endif
    }
    return out;
}

MatmulKernel select_matmul_kernel(uint64_t p, size_t d) {
    bool small = fits_u64_accumulation(p, d);
    if (!g_forced.empty()) {
        if (g_forced == "generic") return {"generic", &matmul_generic};
        if (g_forced == "u64acc" && small) return {"u64acc", &matmul_u64acc};
#if defined(ZKGL_WITH_AVX2)
        if (g_forced == "avx2" && small && cpu_has_avx2()) return {"avx2", &matmul_avx2};
#endif
        // forced kernel not applicable to this (p, d): fall through
    }
    if (small) {
#if defined(ZKGL_WITH_AVX2)
        if (cpu_has_avx2()) return {"avx2", &matmul_avx2};
#endif
        return {"u64acc", &matmul_u64acc};
    }
    return {"generic", &matmul_generic};
}

bool force_matmul_kernel(const std::string& name) {
    if (name.empty() || name == "generic" || name == "u64acc") {
        g_forced = name;
        return true;
    }
    if (name == "avx2" && cpu_has_avx2()) {
        g_forced = name;
        return true;
    }
    return false;
}

} // namespace zkgl
