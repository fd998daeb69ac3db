#pragma once

#include <cstdint>

#include "zkgl/errors.hpp"

namespace zkgl {

// Exact arithmetic in the prime field F_p for a runtime-chosen prime p.
// Moduli are restricted to 3 <= p < 2^63 so every product fits in
// double-width integer arithmetic. All residues are kept canonical in
// [0, p); there is no lazy reduction.

struct PrimeModulus {
    uint64_t p = 0;
    unsigned elem_width = 0; // bytes per serialized element: smallest w with 256^w >= p

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Checks 3 <= p < 2^63 and primality, computes elem_width.
// Errors: TooSmall, TooLarge, NotPrime.
PrimeModulus validate_modulus(uint64_t p);

// Raw residue arithmetic. Callers keep operands canonical.

inline uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b; // no overflow: a, b < 2^63
    return s >= p ? s - p : s;
}

inline uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t fp_neg(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

inline uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// a^e mod p by square-and-multiply; a^0 = 1 (including 0^0).
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);

// Multiplicative inverse by extended Euclid. Errors: ZeroInverse.
uint64_t fp_inv(uint64_t a, uint64_t p);

// A residue tagged with its modulus; operations between mismatched
// moduli raise ModulusMismatch.
struct FieldElement {
    uint64_t value = 0;
    uint64_t p = 0;

    FieldElement() = default;
    FieldElement(uint64_t v, const PrimeModulus& mod) : value(v % mod.p), p(mod.p) {}
    FieldElement(uint64_t v, uint64_t modulus) : value(v % modulus), p(modulus) {}

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return raw(fp_add(value, o.value, p), p);
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return raw(fp_sub(value, o.value, p), p);
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return raw(fp_mul(value, o.value, p), p);
    }
    FieldElement operator-() const { return raw(fp_neg(value, p), p); }

    FieldElement inv() const { return raw(fp_inv(value, p), p); }
    FieldElement pow(uint64_t e) const { return raw(fp_pow(value, e, p), p); }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

    static FieldElement raw(uint64_t v, uint64_t p) {
        FieldElement e;
        e.value = v;
        e.p = p;
        return e;
    }

private:
    void check(const FieldElement& o) const {
        if (p != o.p) raise(Errc::ModulusMismatch, "field elements from different moduli");
    }
};

} // namespace zkgl
