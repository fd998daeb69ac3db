#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zkgl/keys.hpp"

namespace zkgl {

// The interactive identification protocol. One round, Alice proving to Bob:
//
//   witness    Alice draws k and commits S = A^k * G_B * A^-m.
//   challenge  Bob flips b. b=0: Q = B^m * H * B^n for a fresh random
//              invertible H. b=1: Q = B^m * S * G_A * B^n.
//   response   b=0: R = S^-m * Q * S^-n.  b=1: R = A^-k * Q * A^-n.
//   verify     b=0: accept iff Q == S^m * R * S^n.
//              b=1: accept iff G_B * G == B^-m * R * B^-n.
//
// The b=1 equation closes because A and B are conjugates of diagonals by
// the same P, so they and all their signed powers commute and the chain
// telescopes down to G_B * G. A prover without A passes b=0 always and
// b=1 essentially never, so t rounds leave a cheater with success
// probability 2^-t.

struct ProverRoundState {
    uint64_t k = 0; // fresh per round, in [1, exponent_bound]
    Matrix S;
    Matrix S_inv;
    // cached powers for both response branches
    Matrix A_neg_k;
    Matrix A_neg_n;
    Matrix S_neg_m;
    Matrix S_neg_n;
};

struct VerifierRoundState {
    int b = 0;
    Matrix Q;
    std::optional<Matrix> h_mask; // the sampled H, kept only in audit mode
    Matrix S_received;
    Matrix target; // G_B * G
};

// One round's 4-tuple plus bookkeeping, appended in order to session logs.
struct RoundRecord {
    uint32_t round_index = 0;
    Matrix S;
    Matrix Q;
    int b = 0;
    Matrix R;
    bool verdict = false;
};

struct SessionConfig {
    uint32_t rounds = 20; // cheating-prover success <= 2^-20
};

struct SessionVerdict {
    bool accepted = false;
    uint32_t rounds_passed = 0;
    std::vector<RoundRecord> records;
};

// Errors: FingerprintMismatch.
ProverRoundState witness_create(const PrivateKey& priv, const PublicKey& peer_pub,
                                const ParamSet& params, RandomSource& rng);

// The verifier rejects singular witnesses before challenging.
// Errors: SingularWitness, FingerprintMismatch.
VerifierRoundState challenge_create(const PrivateKey& verifier_priv, const Matrix& S,
                                    const PublicKey& prover_pub, const ParamSet& params,
                                    RandomSource& rng, bool audit = false);

// Branch selected solely by the received bit. Errors: SingularChallenge.
Matrix response_create(const ProverRoundState& state, int challenge_b, const Matrix& Q,
                       const ParamSet& params);

// Strict matrix equality; exact field arithmetic admits no tolerance.
// Errors: SingularResponse.
bool round_verify(const VerifierRoundState& vstate, const Matrix& R,
                  const PrivateKey& verifier_priv, const ParamSet& params);

// Replays the verification equation against a recorded 4-tuple. The b=1
// branch needs the verifier's key.
bool record_verifies(const RoundRecord& record, const PrivateKey& verifier_priv,
                     const ParamSet& params);

// t independent rounds with fresh k and b; accepted iff every round passes.
SessionVerdict session_run(const PrivateKey& prover_priv, const PublicKey& prover_pub,
                           const PrivateKey& verifier_priv, const PublicKey& verifier_pub,
                           const ParamSet& params, const SessionConfig& cfg, RandomSource& rng);

// One b=1 round played by an impersonator holding an unrelated key
// fake_priv while claiming true_pub's identity. `residual` is what the
// verifier's final check produced, B^-m * R* * B^-n; acceptance would
// require it to equal G_B * G, which fails unless the fake key's m-th and
// n-th powers match the true key's.
struct ForgeryOutcome {
    RoundRecord record;
    Matrix residual;
    Matrix target; // G_B * G
};

ForgeryOutcome mallory_forge(const PrivateKey& fake_priv, const PublicKey& true_pub,
                             const PrivateKey& verifier_priv, const ParamSet& params,
                             RandomSource& rng);

// Transcript forger: emits round records that satisfy the verification
// equations without ever touching the prover's secret.
//   b=0: S*, Q uniform invertible, R = S*^-m * Q * S*^-n;
//   b=1: S = G_B * G * G_A^-1, Q = B^m * S * G_A * B^n, R = Q.
// The b=1 branch computes with the verifier's own key, so this is an
// honest-verifier simulation; it evidences that accepted transcripts
// carry no key material.
std::vector<RoundRecord> simulate_transcript(const ParamSet& params, const PublicKey& prover_pub,
                                             const PrivateKey& verifier_priv,
                                             const PublicKey& verifier_pub, uint32_t rounds,
                                             RandomSource& rng);

// JSON Lines, one round per line:
// {"round":i,"S":hex,"b":0|1,"Q":hex,"R":hex,"verdict":bool}
void write_transcript_jsonl(const std::vector<RoundRecord>& records, const std::string& path);
std::string transcript_line(const RoundRecord& record);

// Deterministic variants for unit tests; production code paths draw k, b
// and H from a RandomSource and never call these.
namespace hooks {

ProverRoundState witness_with_k(const PrivateKey& priv, const PublicKey& peer_pub,
                                const ParamSet& params, uint64_t k);

VerifierRoundState challenge_with(const PrivateKey& verifier_priv, const Matrix& S,
                                  const PublicKey& prover_pub, const ParamSet& params, int b,
                                  const std::optional<Matrix>& forced_h);

} // namespace hooks

} // namespace zkgl
