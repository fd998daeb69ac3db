#include "zkgl/field.hpp"

#include <utility>

namespace zkgl {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::TooSmall: return "TooSmall";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::Singular: return "Singular";
        case Errc::ModulusTooSmall: return "ModulusTooSmall";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::FingerprintMismatch: return "FingerprintMismatch";
        case Errc::SingularWitness: return "SingularWitness";
        case Errc::SingularChallenge: return "SingularChallenge";
        case Errc::SingularResponse: return "SingularResponse";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::BadLength: return "BadLength";
        case Errc::OutOfRangeElement: return "OutOfRangeElement";
        case Errc::BadMagic: return "BadMagic";
        case Errc::BadVersion: return "BadVersion";
        case Errc::UnknownType: return "UnknownType";
        case Errc::PayloadTooLarge: return "PayloadTooLarge";
        case Errc::Truncated: return "Truncated";
        case Errc::IoError: return "IoError";
        case Errc::ProtocolViolation: return "ProtocolViolation";
        case Errc::UnknownPeer: return "UnknownPeer";
        case Errc::Timeout: return "Timeout";
    }
    return "Unknown";
}

uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t base = a % p;
    uint64_t acc = 1 % p;
    while (e != 0) {
        if (e & 1) acc = fp_mul(acc, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) raise(Errc::ZeroInverse, "inverse of zero");
    // extended Euclid; p < 2^63 keeps all intermediates in int64 range
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = fp_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < s - 1; ++i) {
        x = fp_mul(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set exact for all n < 3.3e24, in particular all 64-bit n
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

PrimeModulus validate_modulus(uint64_t p) {
    if (p < 3) raise(Errc::TooSmall, "modulus must be at least 3");
    if (p >= (1ull << 63)) raise(Errc::TooLarge, "modulus must be below 2^63");
    if (!is_prime_u64(p)) raise(Errc::NotPrime, "modulus " + std::to_string(p) + " is composite");
    PrimeModulus mod;
    mod.p = p;
    unsigned w = 0;
    unsigned __int128 cap = 1;
    while (cap < p) {
        cap <<= 8;
        ++w;
    }
    mod.elem_width = w;
    return mod;
}

} // namespace zkgl
