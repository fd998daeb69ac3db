#include "zkgl/protocol.hpp"

#include <fstream>
#include <sstream>

#include "zkgl/wire.hpp"

namespace zkgl {

namespace {

void check_fingerprint(const std::array<uint8_t, 8>& fp, const ParamSet& params,
                       const char* what) {
    if (fp != params.fingerprint)
        raise(Errc::FingerprintMismatch, std::string(what) + " belongs to a different parameter set");
}

int64_t se(uint64_t v) { return static_cast<int64_t>(v); }

ProverRoundState build_prover_state(const PrivateKey& priv, const PublicKey& peer_pub,
                                    const ParamSet& params, uint64_t k) {
    ProverRoundState st;
    st.k = k;
    Matrix a_pow_k = mat_pow(priv.A, se(k));
    Matrix a_neg_m = mat_pow(priv.A_inv, se(params.m));
    st.S = a_pow_k * peer_pub.g_x * a_neg_m;
    st.S_inv = mat_inv(st.S);
    st.A_neg_k = mat_pow(priv.A_inv, se(k));
    st.A_neg_n = mat_pow(priv.A_inv, se(params.n));
    st.S_neg_m = mat_pow(st.S_inv, se(params.m));
    st.S_neg_n = mat_pow(st.S_inv, se(params.n));
    return st;
}

VerifierRoundState build_verifier_state(const PrivateKey& verifier_priv, const Matrix& S,
                                        const PublicKey& prover_pub, const ParamSet& params,
                                        int b, const std::optional<Matrix>& forced_h,
                                        RandomSource* rng, bool audit) {
    if (!is_invertible(S)) raise(Errc::SingularWitness, "witness matrix is singular");

    Matrix b_pow_m = mat_pow(verifier_priv.A, se(params.m));
    Matrix b_pow_n = mat_pow(verifier_priv.A, se(params.n));
    Matrix g_b = b_pow_m * params.G * b_pow_n;

    VerifierRoundState st;
    st.b = b;
    st.S_received = S;
    st.target = g_b * params.G;
    if (b == 0) {
        Matrix h = forced_h ? *forced_h : sample_invertible(params.mod, params.d, *rng);
        st.Q = b_pow_m * h * b_pow_n;
        if (audit) st.h_mask = std::move(h);
    } else {
        st.Q = b_pow_m * S * prover_pub.g_x * b_pow_n;
    }
    return st;
}

} // namespace

ProverRoundState witness_create(const PrivateKey& priv, const PublicKey& peer_pub,
                                const ParamSet& params, RandomSource& rng) {
    check_fingerprint(priv.params_fingerprint, params, "prover key");
    check_fingerprint(peer_pub.params_fingerprint, params, "peer public key");
    uint64_t k = rng.uniform_range(1, params.exponent_bound);
    return build_prover_state(priv, peer_pub, params, k);
}

VerifierRoundState challenge_create(const PrivateKey& verifier_priv, const Matrix& S,
                                    const PublicKey& prover_pub, const ParamSet& params,
                                    RandomSource& rng, bool audit) {
    check_fingerprint(verifier_priv.params_fingerprint, params, "verifier key");
    check_fingerprint(prover_pub.params_fingerprint, params, "prover public key");
    int b = rng.coin();
    return build_verifier_state(verifier_priv, S, prover_pub, params, b, std::nullopt, &rng, audit);
}

Matrix response_create(const ProverRoundState& state, int challenge_b, const Matrix& Q,
                       const ParamSet& params) {
    (void)params;
    if (!is_invertible(Q)) raise(Errc::SingularChallenge, "challenge matrix is singular");
    if (challenge_b == 0) return state.S_neg_m * Q * state.S_neg_n;
    return state.A_neg_k * Q * state.A_neg_n;
}

bool round_verify(const VerifierRoundState& vstate, const Matrix& R,
                  const PrivateKey& verifier_priv, const ParamSet& params) {
    if (!is_invertible(R)) raise(Errc::SingularResponse, "response matrix is singular");
    if (vstate.b == 0) {
        Matrix lhs = mat_pow(vstate.S_received, se(params.m)) * R *
                     mat_pow(vstate.S_received, se(params.n));
        return lhs == vstate.Q;
    }
    Matrix lhs = mat_pow(verifier_priv.A_inv, se(params.m)) * R *
                 mat_pow(verifier_priv.A_inv, se(params.n));
    return lhs == vstate.target;
}

bool record_verifies(const RoundRecord& record, const PrivateKey& verifier_priv,
                     const ParamSet& params) {
    if (!is_invertible(record.R)) return false;
    if (record.b == 0) {
        Matrix lhs =
            mat_pow(record.S, se(params.m)) * record.R * mat_pow(record.S, se(params.n));
        return lhs == record.Q;
    }
    Matrix b_pow_m = mat_pow(verifier_priv.A, se(params.m));
    Matrix b_pow_n = mat_pow(verifier_priv.A, se(params.n));
    Matrix target = b_pow_m * params.G * b_pow_n * params.G;
    Matrix lhs = mat_pow(verifier_priv.A_inv, se(params.m)) * record.R *
                 mat_pow(verifier_priv.A_inv, se(params.n));
    return lhs == target;
}

SessionVerdict session_run(const PrivateKey& prover_priv, const PublicKey& prover_pub,
                           const PrivateKey& verifier_priv, const PublicKey& verifier_pub,
                           const ParamSet& params, const SessionConfig& cfg, RandomSource& rng) {
    if (cfg.rounds < 1) raise(Errc::InvalidArgument, "session needs at least one round");
    check_fingerprint(prover_priv.params_fingerprint, params, "prover key");
    check_fingerprint(prover_pub.params_fingerprint, params, "prover public key");
    check_fingerprint(verifier_priv.params_fingerprint, params, "verifier key");
    check_fingerprint(verifier_pub.params_fingerprint, params, "verifier public key");

    SessionVerdict verdict;
    verdict.records.reserve(cfg.rounds);
    for (uint32_t i = 0; i < cfg.rounds; ++i) {
        ProverRoundState prover = witness_create(prover_priv, verifier_pub, params, rng);
        VerifierRoundState verifier =
            challenge_create(verifier_priv, prover.S, prover_pub, params, rng);
        Matrix response = response_create(prover, verifier.b, verifier.Q, params);
        bool ok = round_verify(verifier, response, verifier_priv, params);
        verdict.records.push_back(
            {i, prover.S, verifier.Q, verifier.b, std::move(response), ok});
        if (ok) ++verdict.rounds_passed;
    }
    verdict.accepted = verdict.rounds_passed == cfg.rounds;
    return verdict;
}

ForgeryOutcome mallory_forge(const PrivateKey& fake_priv, const PublicKey& true_pub,
                             const PrivateKey& verifier_priv, const ParamSet& params,
                             RandomSource& rng) {
    check_fingerprint(fake_priv.params_fingerprint, params, "fake key");
    check_fingerprint(true_pub.params_fingerprint, params, "impersonated public key");
    check_fingerprint(verifier_priv.params_fingerprint, params, "verifier key");

    PublicKey verifier_pub = derive_public(params, verifier_priv);
    // impersonator runs the honest prover algorithm with its own key ...
    ProverRoundState fake_state =
        witness_create(fake_priv, verifier_pub, params, rng);
    // ... against a verifier that challenges on the claimed identity's key
    VerifierRoundState verifier =
        build_verifier_state(verifier_priv, fake_state.S, true_pub, params, 1, std::nullopt,
                             nullptr, false);
    Matrix response = response_create(fake_state, 1, verifier.Q, params);
    bool ok = round_verify(verifier, response, verifier_priv, params);

    Matrix residual = mat_pow(verifier_priv.A_inv, se(params.m)) * response *
                      mat_pow(verifier_priv.A_inv, se(params.n));
    return ForgeryOutcome{
        RoundRecord{0, fake_state.S, verifier.Q, 1, std::move(response), ok},
        std::move(residual), verifier.target};
}

std::vector<RoundRecord> simulate_transcript(const ParamSet& params, const PublicKey& prover_pub,
                                             const PrivateKey& verifier_priv,
                                             const PublicKey& verifier_pub, uint32_t rounds,
                                             RandomSource& rng) {
    if (rounds < 1) raise(Errc::InvalidArgument, "simulation needs at least one round");
    check_fingerprint(prover_pub.params_fingerprint, params, "prover public key");
    check_fingerprint(verifier_priv.params_fingerprint, params, "verifier key");
    check_fingerprint(verifier_pub.params_fingerprint, params, "verifier public key");

    std::vector<RoundRecord> records;
    records.reserve(rounds);
    for (uint32_t i = 0; i < rounds; ++i) {
        int b = rng.coin();
        RoundRecord rec;
        rec.round_index = i;
        rec.b = b;
        if (b == 0) {
            Matrix s_fake = sample_invertible(params.mod, params.d, rng);
            Matrix q = sample_invertible(params.mod, params.d, rng);
            Matrix s_fake_inv = mat_inv(s_fake);
            rec.R = mat_pow(s_fake_inv, se(params.m)) * q * mat_pow(s_fake_inv, se(params.n));
            rec.S = std::move(s_fake);
            rec.Q = std::move(q);
        } else {
            Matrix s = verifier_pub.g_x * params.G * mat_inv(prover_pub.g_x);
            Matrix b_pow_m = mat_pow(verifier_priv.A, se(params.m));
            Matrix b_pow_n = mat_pow(verifier_priv.A, se(params.n));
            rec.Q = b_pow_m * s * prover_pub.g_x * b_pow_n;
            rec.R = rec.Q;
            rec.S = std::move(s);
        }
        rec.verdict = record_verifies(rec, verifier_priv, params);
        records.push_back(std::move(rec));
    }
    return records;
}

std::string transcript_line(const RoundRecord& record) {
    std::ostringstream os;
    os << "{\"round\":" << record.round_index << ",\"S\":\"" << to_hex(encode_matrix(record.S))
       << "\",\"b\":" << record.b << ",\"Q\":\"" << to_hex(encode_matrix(record.Q))
       << "\",\"R\":\"" << to_hex(encode_matrix(record.R)) << "\",\"verdict\":"
       << (record.verdict ? "true" : "false") << "}";
    return os.str();
}

void write_transcript_jsonl(const std::vector<RoundRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(Errc::IoError, "cannot create " + path);
    for (const auto& rec : records) out << transcript_line(rec) << "\n";
    if (!out) raise(Errc::IoError, "write failed for " + path);
}

namespace hooks {

ProverRoundState witness_with_k(const PrivateKey& priv, const PublicKey& peer_pub,
                                const ParamSet& params, uint64_t k) {
    check_fingerprint(priv.params_fingerprint, params, "prover key");
    check_fingerprint(peer_pub.params_fingerprint, params, "peer public key");
    if (k < 1 || k > params.exponent_bound)
        raise(Errc::InvalidArgument, "k outside [1, exponent_bound]");
    return build_prover_state(priv, peer_pub, params, k);
}

VerifierRoundState challenge_with(const PrivateKey& verifier_priv, const Matrix& S,
                                  const PublicKey& prover_pub, const ParamSet& params, int b,
                                  const std::optional<Matrix>& forced_h) {
    check_fingerprint(verifier_priv.params_fingerprint, params, "verifier key");
    check_fingerprint(prover_pub.params_fingerprint, params, "prover public key");
    if (b != 0 && b != 1) raise(Errc::InvalidArgument, "challenge bit must be 0 or 1");
    if (b == 0 && !forced_h) raise(Errc::InvalidArgument, "b = 0 hook needs a forced H");
    return build_verifier_state(verifier_priv, S, prover_pub, params, b, forced_h, nullptr, true);
}

} // namespace hooks

} // namespace zkgl
