#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "zkgl/matrix.hpp"
#include "zkgl/rng.hpp"

namespace zkgl {

// Community agreement and key material.
//
// A ParamSet is shared by the whole community: the prime p, dimension d,
// two public invertible matrices P and G, and the public exponents m, n.
// Each party's private key is a diagonal with distinct nonzero entries,
// hidden by conjugation: A = P * D * P^-1. All such conjugates (and all
// their signed powers) commute, which is what makes the round equations
// cancel for honest parties. The public key wraps the private one behind
// the one-way decomposition: g_x = A^m * G * A^n.
//
// Note that P is public here by design of the scheme; see the README for
// the security discussion.

struct ParamSet {
    PrimeModulus mod;
    uint32_t d = 0;
    Matrix P;
    Matrix P_inv; // cached
    Matrix G;
    uint64_t m = 0;
    uint64_t n = 0;
    uint64_t exponent_bound = 0;
    bool strict_order = false;
    std::array<uint8_t, 8> fingerprint{};
};

inline constexpr uint64_t kDefaultExponentBound = 65536;

// First 8 bytes of SHA-256 over p (8 LE) | d (2 LE) | m (8 LE) | n (8 LE)
// | encoded P | encoded G.
std::array<uint8_t, 8> params_fingerprint(const PrimeModulus& mod, uint32_t d, uint64_t m,
                                          uint64_t n, const Matrix& P, const Matrix& G);

// Samples P, G invertible (with irreducible characteristic polynomials
// when strict_order) and m, n uniform in [1, exponent_bound].
// Errors: NotPrime, TooSmall, TooLarge, ModulusTooSmall, FieldTooSmall.
ParamSet gen_params(uint64_t p, uint32_t d, uint64_t exponent_bound, bool strict_order,
                    RandomSource& rng);

// Builds a ParamSet from explicit parts (file loading, fixed test
// fixtures). Validates all ParamSet invariants and computes the
// fingerprint.
ParamSet make_params(PrimeModulus mod, Matrix P, Matrix G, uint64_t m, uint64_t n,
                     uint64_t exponent_bound, bool strict_order);

struct PrivateKey {
    std::string owner_id;
    DiagonalSpec lambdas;
    Matrix A;
    Matrix A_inv; // cached
    std::array<uint8_t, 8> params_fingerprint{};
};

struct PublicKey {
    std::string owner_id;
    Matrix g_x;
    std::array<uint8_t, 8> params_fingerprint{};
};

std::pair<PrivateKey, PublicKey> gen_keypair(const ParamSet& params, const std::string& owner_id,
                                             RandomSource& rng);

// Rebuilds the full private key from its compact secret (the diagonal).
PrivateKey private_key_from_lambdas(const ParamSet& params, const std::string& owner_id,
                                    DiagonalSpec lambdas);

// g_x = A^m * G * A^n. Deterministic. Errors: FingerprintMismatch.
PublicKey derive_public(const ParamSet& params, const PrivateKey& priv);

// Private-key counting. Two counts are reported: the scheme's advertised
// keyspace figure, prod_{i=2}^{d+1} (p - i), and the direct count of
// ordered draws of d distinct nonzero values, prod_{i=1}^{d} (p - i).
// The advertised product starts one factor lower; the discrepancy is
// surfaced rather than resolved. Both are exact big-integer values.
struct KeyspaceReport {
    std::string cardinality_nominal; // decimal; advertised figure
    std::string cardinality_direct;  // decimal; ordered distinct draws
    double bits_nominal = 0.0;
    double bits_direct = 0.0;
};

// Errors: NotPrime, FieldTooSmall.
KeyspaceReport keyspace_cardinality(uint64_t p, uint32_t d);

// JSON file formats (lowercase hex for matrix bytes):
//   params:  {"p","d","m","n","exponent_bound","strict_order","P","G","fingerprint"}
//   private: {"owner_id","lambdas":[...],"params_fingerprint"}   (0600 perms)
//   public:  {"owner_id","g_x","params_fingerprint"}
void save_params(const ParamSet& params, const std::string& path);
ParamSet load_params(const std::string& path);

void save_private_key(const PrivateKey& priv, const std::string& path);
PrivateKey load_private_key(const std::string& path, const ParamSet& params);

void save_public_key(const PublicKey& pub, const std::string& path);
PublicKey load_public_key(const std::string& path, const ParamSet& params);

} // namespace zkgl
