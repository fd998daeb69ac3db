#include "zkgl/gsdp.hpp"

#include <algorithm>

namespace zkgl {

std::optional<uint64_t> subgroup_cardinality(const PrimeModulus& mod, uint32_t d) {
    uint64_t count = 1;
    for (uint64_t i = 1; i <= d; ++i) {
        uint64_t factor = mod.p - i;
        if (factor != 0 && count > UINT64_MAX / factor) return std::nullopt;
        count *= factor;
    }
    return count;
}

SubgroupEnumerator::SubgroupEnumerator(PrimeModulus mod, uint32_t d, uint64_t cap)
    : mod_(mod), d_(d), total_(0), used_(static_cast<size_t>(mod.p), false) {
    if (d == 0) raise(Errc::InvalidArgument, "dimension must be positive");
    if (mod.p - 1 < d) raise(Errc::FieldTooSmall, "need p - 1 >= d");
    auto count = subgroup_cardinality(mod, d);
    if (!count || *count > cap)
        raise(Errc::EnumerationTooLarge,
              "subgroup has " + (count ? std::to_string(*count) : std::string(">2^64")) +
                  " elements, cap is " + std::to_string(cap));
    total_ = *count;
}

bool SubgroupEnumerator::next(std::vector<uint64_t>& out) {
    if (done_) return false;
    if (!started_) {
        // smallest tuple: (1, 2, ..., d)
        current_.resize(d_);
        for (uint32_t i = 0; i < d_; ++i) {
            current_[i] = i + 1;
            used_[i + 1] = true;
        }
        started_ = true;
        out = current_;
        return true;
    }
    // advance rightmost position that can move to a larger unused value
    size_t pos = d_;
    while (pos-- > 0) {
        uint64_t v = current_[pos];
        used_[v] = false;
        for (uint64_t cand = v + 1; cand < mod_.p; ++cand) {
            if (used_[cand]) continue;
            current_[pos] = cand;
            used_[cand] = true;
            // fill the suffix with the smallest unused values ascending
            for (size_t s = pos + 1; s < d_; ++s) {
                for (uint64_t c2 = 1; c2 < mod_.p; ++c2) {
                    if (!used_[c2]) {
                        current_[s] = c2;
                        used_[c2] = true;
                        break;
                    }
                }
            }
            out = current_;
            return true;
        }
        // no larger value available here: leave the slot free and backtrack
    }
    done_ = true;
    return false;
}

GsdpSolutionSet gsdp_solve_bruteforce(const GsdpInstance& inst, uint64_t cap) {
    if (!is_invertible(inst.x)) raise(Errc::InvalidArgument, "instance x must be invertible");
    if (!is_invertible(inst.y)) raise(Errc::InvalidArgument, "instance y must be invertible");

    const uint64_t p = inst.mod.p;
    const uint32_t d = inst.d;
    Matrix p_inv = mat_inv(inst.P);
    // z = P D P^-1 gives z^m x z^n = P (D^m x' D^n) P^-1 with x' = P^-1 x P,
    // so candidates are screened entrywise against y' = P^-1 y P.
    Matrix x_conj = p_inv * inst.x * inst.P;
    Matrix y_conj = p_inv * inst.y * inst.P;

    GsdpSolutionSet result;
    SubgroupEnumerator en(inst.mod, d, cap);
    std::vector<uint64_t> lambdas;
    std::vector<uint64_t> lm(d), ln(d);
    while (en.next(lambdas)) {
        ++result.candidates_tested;
        for (uint32_t i = 0; i < d; ++i) {
            lm[i] = fp_pow(lambdas[i], inst.m, p);
            ln[i] = fp_pow(lambdas[i], inst.n, p);
        }
        bool match = true;
        for (uint32_t i = 0; i < d && match; ++i)
            for (uint32_t j = 0; j < d; ++j) {
                uint64_t v = fp_mul(fp_mul(lm[i], x_conj.at(i, j), p), ln[j], p);
                if (v != y_conj.at(i, j)) {
                    match = false;
                    break;
                }
            }
        if (!match) continue;
        // independent re-check through the plain matrix route
        DiagonalSpec spec(inst.mod, lambdas);
        Matrix z = conjugate(inst.P, spec);
        Matrix recomputed = mat_pow(z, static_cast<int64_t>(inst.m)) * inst.x *
                            mat_pow(z, static_cast<int64_t>(inst.n));
        if (recomputed == inst.y) result.solutions.push_back(std::move(spec));
    }
    // enumeration is lexicographic already; keep the contract explicit
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const DiagonalSpec& a, const DiagonalSpec& b) { return a.lambdas < b.lambdas; });
    return result;
}

GsdpInstance instance_from_public(const ParamSet& params, const PublicKey& victim) {
    if (victim.params_fingerprint != params.fingerprint)
        raise(Errc::FingerprintMismatch, "public key belongs to a different parameter set");
    return GsdpInstance{params.mod, params.d, params.P, params.G, victim.g_x, params.m, params.n};
}

GsdpSolutionSet attack_recover_key(const ParamSet& params, const PublicKey& victim,
                                   uint64_t cap) {
    return gsdp_solve_bruteforce(instance_from_public(params, victim), cap);
}

} // namespace zkgl
