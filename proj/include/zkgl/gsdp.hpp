#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zkgl/keys.hpp"

namespace zkgl {

// Brute-force solver for the symmetric decomposition instances behind the
// public keys: given x, y and exponents m, n, find z in the
// conjugated-diagonal subgroup { P * D * P^-1 } with y = z^m * x * z^n.
// Exhaustive over the subgroup, so usable only at toy sizes; this is the
// independent oracle the security tests lean on. Since P is a shared
// parameter, the subgroup being searched is public structure here.

struct GsdpInstance {
    PrimeModulus mod;
    uint32_t d = 0;
    Matrix P;
    Matrix x;
    Matrix y;
    uint64_t m = 0;
    uint64_t n = 0;
};

struct GsdpSolutionSet {
    std::vector<DiagonalSpec> solutions; // lexicographic by lambda tuple
    uint64_t candidates_tested = 0;
};

inline constexpr uint64_t kDefaultEnumerationCap = 10'000'000;

// Ordered d-tuples of distinct nonzero values: (p-1)(p-2)...(p-d).
// nullopt when the count overflows uint64 (then it certainly exceeds any
// practical cap).
std::optional<uint64_t> subgroup_cardinality(const PrimeModulus& mod, uint32_t d);

// Yields every ordered d-tuple of distinct values from {1, ..., p-1} in
// lexicographic order, each exactly once.
// Errors: FieldTooSmall, EnumerationTooLarge (against `cap`).
class SubgroupEnumerator {
public:
    SubgroupEnumerator(PrimeModulus mod, uint32_t d, uint64_t cap = kDefaultEnumerationCap);

    // False once exhausted; `out` is untouched then.
    bool next(std::vector<uint64_t>& out);

    uint64_t total() const { return total_; }

private:
    PrimeModulus mod_;
    uint32_t d_;
    uint64_t total_;
    std::vector<uint64_t> current_;
    std::vector<bool> used_;
    bool started_ = false;
    bool done_ = false;
};

// Tests every subgroup element; all solutions are returned (they need not
// be unique) and each is re-verified through the plain matrix route
// before emission. Errors: EnumerationTooLarge.
GsdpSolutionSet gsdp_solve_bruteforce(const GsdpInstance& inst,
                                      uint64_t cap = kDefaultEnumerationCap);

// The instance a public key poses: x = G, y = g_x under the community P.
GsdpInstance instance_from_public(const ParamSet& params, const PublicKey& victim);

// Brute-force key recovery; any returned diagonal is functionally
// equivalent to the victim's key for impersonation.
GsdpSolutionSet attack_recover_key(const ParamSet& params, const PublicKey& victim,
                                   uint64_t cap = kDefaultEnumerationCap);

} // namespace zkgl
