#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zkgl {

// Inner-loop kernels for dense matrix multiplication over F_p.
//
// Three implementations of the same contract:
//   generic - scalar reference, any p < 2^63, 128-bit product per step;
//   u64acc  - scalar fast path for small p: a whole dot product is
//             accumulated in one uint64 and reduced once;
//   avx2    - vectorized u64acc (4 output columns per register), built
//             only on x86-64 and selected only when the CPU reports AVX2.
//
// Selection happens at runtime from (p, d) and the host CPU. All kernels
// produce bit-identical output; the test suite asserts equivalence on
// random inputs across moduli and dimensions.

// C = A*B mod p for row-major d x d buffers. C must not alias A or B.
using MatmulFn = void (*)(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p);

struct MatmulKernel {
    const char* name;
    MatmulFn fn;
};

// True when d products of residues < p sum without overflowing uint64,
// i.e. d*(p-1)^2 <= 2^64 - 1. This is the precondition of the u64acc
// and avx2 kernels.
bool fits_u64_accumulation(uint64_t p, size_t d);

bool cpu_has_avx2();

// Kernels applicable to (p, d) on this host, reference first, fastest last.
std::vector<MatmulKernel> applicable_matmul_kernels(uint64_t p, size_t d);

// Kernel used by mat_mul for (p, d): the forced one when set and
// applicable, otherwise the fastest applicable.
MatmulKernel select_matmul_kernel(uint64_t p, size_t d);

// Test/bench hook. Forces kernel selection by name ("generic", "u64acc",
// "avx2"); an empty name restores automatic selection. Returns false for
// an unknown name or one this host cannot run. Not thread-safe; intended
// for single-threaded tools.
bool force_matmul_kernel(const std::string& name);

// Scalar kernels, exposed for direct equivalence testing.
void matmul_generic(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p);
void matmul_u64acc(uint64_t* c, const uint64_t* a, const uint64_t* b, size_t d, uint64_t p);

} // namespace zkgl
