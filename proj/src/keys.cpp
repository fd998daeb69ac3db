#include "zkgl/keys.hpp"

#include <gmp.h>
#include <openssl/sha.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "zkgl/wire.hpp"

namespace zkgl {

using nlohmann::json;

std::array<uint8_t, 8> params_fingerprint(const PrimeModulus& mod, uint32_t d, uint64_t m,
                                          uint64_t n, const Matrix& P, const Matrix& G) {
    std::vector<uint8_t> buf;
    auto put_u64 = [&buf](uint64_t v) {
        for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
    };
    put_u64(mod.p);
    buf.push_back(static_cast<uint8_t>(d));
    buf.push_back(static_cast<uint8_t>(d >> 8));
    put_u64(m);
    put_u64(n);
    auto pb = encode_matrix(P);
    buf.insert(buf.end(), pb.begin(), pb.end());
    auto gb = encode_matrix(G);
    buf.insert(buf.end(), gb.begin(), gb.end());

    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(buf.data(), buf.size(), digest);
    std::array<uint8_t, 8> out{};
    std::copy_n(digest, 8, out.begin());
    return out;
}

namespace {

void check_param_sizes(const PrimeModulus& mod, uint32_t d) {
    if (d == 0) raise(Errc::InvalidArgument, "dimension must be positive");
    if (d > 255) raise(Errc::InvalidArgument, "dimension above 255 unsupported");
    if (mod.p <= static_cast<uint64_t>(d) + 1)
        raise(Errc::ModulusTooSmall, "need p > d + 1");
    if (mod.p - 1 < d) raise(Errc::FieldTooSmall, "need p - 1 >= d");
}

} // namespace

ParamSet make_params(PrimeModulus mod, Matrix P, Matrix G, uint64_t m, uint64_t n,
                     uint64_t exponent_bound, bool strict_order) {
    check_param_sizes(mod, static_cast<uint32_t>(P.dim()));
    if (P.dim() != G.dim()) raise(Errc::DimensionMismatch, "P and G dimensions differ");
    if (P.mod() != mod || G.mod() != mod) raise(Errc::ModulusMismatch, "P or G modulus differs");
    if (exponent_bound < 1) raise(Errc::InvalidArgument, "exponent bound must be >= 1");
    if (exponent_bound >= (1ull << 62)) raise(Errc::TooLarge, "exponent bound too large");
    if (m < 1 || m > exponent_bound || n < 1 || n > exponent_bound)
        raise(Errc::InvalidArgument, "m, n must lie in [1, exponent_bound]");
    if (!is_invertible(P)) raise(Errc::Singular, "P must be invertible");
    if (!is_invertible(G)) raise(Errc::Singular, "G must be invertible");
    if (strict_order) {
        if (!poly_is_irreducible(char_poly(P)))
            raise(Errc::InvalidArgument, "strict_order set but char poly of P is reducible");
        if (!poly_is_irreducible(char_poly(G)))
            raise(Errc::InvalidArgument, "strict_order set but char poly of G is reducible");
    }

    ParamSet params{mod,
                    static_cast<uint32_t>(P.dim()),
                    P,
                    mat_inv(P),
                    G,
                    m,
                    n,
                    exponent_bound,
                    strict_order,
                    {}};
    params.fingerprint = params_fingerprint(mod, params.d, m, n, params.P, params.G);
    return params;
}

ParamSet gen_params(uint64_t p, uint32_t d, uint64_t exponent_bound, bool strict_order,
                    RandomSource& rng) {
    PrimeModulus mod = validate_modulus(p);
    check_param_sizes(mod, d);
    if (exponent_bound < 1) raise(Errc::InvalidArgument, "exponent bound must be >= 1");

    auto sample = [&]() {
        for (;;) {
            Matrix m_ = sample_invertible(mod, d, rng);
            if (!strict_order || poly_is_irreducible(char_poly(m_))) return m_;
        }
    };
    Matrix P = sample();
    Matrix G = sample();
    uint64_t m = rng.uniform_range(1, exponent_bound);
    uint64_t n = rng.uniform_range(1, exponent_bound);
    return make_params(mod, std::move(P), std::move(G), m, n, exponent_bound, strict_order);
}

std::pair<PrivateKey, PublicKey> gen_keypair(const ParamSet& params, const std::string& owner_id,
                                             RandomSource& rng) {
    DiagonalSpec lambdas = sample_distinct_diagonal(params.mod, params.d, rng);
    PrivateKey priv = private_key_from_lambdas(params, owner_id, std::move(lambdas));
    PublicKey pub = derive_public(params, priv);
    return {std::move(priv), std::move(pub)};
}

PrivateKey private_key_from_lambdas(const ParamSet& params, const std::string& owner_id,
                                    DiagonalSpec lambdas) {
    if (lambdas.dim() != params.d) raise(Errc::DimensionMismatch, "diagonal dimension mismatch");
    if (lambdas.mod != params.mod) raise(Errc::ModulusMismatch, "diagonal modulus mismatch");
    // A = P D P^-1 without re-inverting P
    Matrix A = mat_mul(mat_mul(params.P, Matrix::diagonal(lambdas)), params.P_inv);
    Matrix A_inv = mat_inv(A);
    return PrivateKey{owner_id, std::move(lambdas), std::move(A), std::move(A_inv),
                      params.fingerprint};
}

PublicKey derive_public(const ParamSet& params, const PrivateKey& priv) {
    if (priv.params_fingerprint != params.fingerprint)
        raise(Errc::FingerprintMismatch, "private key belongs to a different parameter set");
    Matrix g_x = mat_mul(mat_mul(mat_pow(priv.A, static_cast<int64_t>(params.m)), params.G),
                         mat_pow(priv.A, static_cast<int64_t>(params.n)));
    return PublicKey{priv.owner_id, std::move(g_x), params.fingerprint};
}

namespace {

KeyspaceReport keyspace_products(uint64_t p, uint32_t d) {
    mpz_t nominal, direct;
    mpz_init_set_ui(nominal, 1);
    mpz_init_set_ui(direct, 1);
    for (uint64_t i = 2; i <= static_cast<uint64_t>(d) + 1; ++i)
        mpz_mul_ui(nominal, nominal, p - i);
    for (uint64_t i = 1; i <= d; ++i) mpz_mul_ui(direct, direct, p - i);

    auto bits_of = [](const mpz_t z) {
        if (mpz_sgn(z) == 0) return 0.0;
        long exp;
        double mant = mpz_get_d_2exp(&exp, z);
        return std::log2(mant) + static_cast<double>(exp);
    };
    auto str_of = [](const mpz_t z) {
        char* s = mpz_get_str(nullptr, 10, z);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    };

    KeyspaceReport report;
    report.cardinality_nominal = str_of(nominal);
    report.cardinality_direct = str_of(direct);
    report.bits_nominal = bits_of(nominal);
    report.bits_direct = bits_of(direct);
    mpz_clears(nominal, direct, nullptr);
    return report;
}

} // namespace

KeyspaceReport keyspace_cardinality(uint64_t p, uint32_t d) {
    if (!is_prime_u64(p)) raise(Errc::NotPrime, "p must be prime");
    if (d == 0) raise(Errc::InvalidArgument, "dimension must be positive");
    if (p - 1 < d) raise(Errc::FieldTooSmall, "need p - 1 >= d");
    return keyspace_products(p, d);
}

namespace {

std::array<uint8_t, 8> fingerprint_from_hex(const std::string& hex) {
    auto bytes = from_hex(hex);
    if (bytes.size() != 8) raise(Errc::BadLength, "fingerprint must be 8 bytes");
    std::array<uint8_t, 8> out{};
    std::copy_n(bytes.begin(), 8, out.begin());
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(Errc::IoError, path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text, bool restrict_mode) {
    if (restrict_mode) {
        int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
        if (fd < 0) raise(Errc::IoError, "cannot create " + path);
        ssize_t n = ::write(fd, text.data(), text.size());
        ::close(fd);
        if (n != static_cast<ssize_t>(text.size())) raise(Errc::IoError, "short write to " + path);
        return;
    }
    std::ofstream out(path);
    if (!out) raise(Errc::IoError, "cannot create " + path);
    out << text;
    if (!out) raise(Errc::IoError, "write failed for " + path);
}

} // namespace

void save_params(const ParamSet& params, const std::string& path) {
    json j;
    j["p"] = params.mod.p;
    j["d"] = params.d;
    j["m"] = params.m;
    j["n"] = params.n;
    j["exponent_bound"] = params.exponent_bound;
    j["strict_order"] = params.strict_order;
    j["P"] = to_hex(encode_matrix(params.P));
    j["G"] = to_hex(encode_matrix(params.G));
    j["fingerprint"] = to_hex(params.fingerprint);
    write_text_file(path, j.dump(2) + "\n", false);
}

ParamSet load_params(const std::string& path) {
    json j = read_json_file(path);
    try {
        PrimeModulus mod = validate_modulus(j.at("p").get<uint64_t>());
        uint32_t d = j.at("d").get<uint32_t>();
        Matrix P = decode_matrix(from_hex(j.at("P").get<std::string>()), d, mod);
        Matrix G = decode_matrix(from_hex(j.at("G").get<std::string>()), d, mod);
        ParamSet params = make_params(mod, std::move(P), std::move(G), j.at("m").get<uint64_t>(),
                                      j.at("n").get<uint64_t>(),
                                      j.at("exponent_bound").get<uint64_t>(),
                                      j.at("strict_order").get<bool>());
        auto stored = fingerprint_from_hex(j.at("fingerprint").get<std::string>());
        if (stored != params.fingerprint)
            raise(Errc::FingerprintMismatch, path + ": stored fingerprint does not match contents");
        return params;
    } catch (const json::exception& e) {
        raise(Errc::IoError, path + ": " + e.what());
    }
}

void save_private_key(const PrivateKey& priv, const std::string& path) {
    json j;
    j["owner_id"] = priv.owner_id;
    j["lambdas"] = priv.lambdas.lambdas;
    j["params_fingerprint"] = to_hex(priv.params_fingerprint);
    write_text_file(path, j.dump(2) + "\n", true);
}

PrivateKey load_private_key(const std::string& path, const ParamSet& params) {
    json j = read_json_file(path);
    try {
        auto fp = fingerprint_from_hex(j.at("params_fingerprint").get<std::string>());
        if (fp != params.fingerprint)
            raise(Errc::FingerprintMismatch,
                  path + ": key was generated under a different parameter set");
        DiagonalSpec lambdas(params.mod, j.at("lambdas").get<std::vector<uint64_t>>());
        return private_key_from_lambdas(params, j.at("owner_id").get<std::string>(),
                                        std::move(lambdas));
    } catch (const json::exception& e) {
        raise(Errc::IoError, path + ": " + e.what());
    }
}

void save_public_key(const PublicKey& pub, const std::string& path) {
    json j;
    j["owner_id"] = pub.owner_id;
    j["g_x"] = to_hex(encode_matrix(pub.g_x));
    j["params_fingerprint"] = to_hex(pub.params_fingerprint);
    write_text_file(path, j.dump(2) + "\n", false);
}

PublicKey load_public_key(const std::string& path, const ParamSet& params) {
    json j = read_json_file(path);
    try {
        auto fp = fingerprint_from_hex(j.at("params_fingerprint").get<std::string>());
        if (fp != params.fingerprint)
            raise(Errc::FingerprintMismatch,
                  path + ": key was generated under a different parameter set");
        Matrix g_x =
            decode_matrix(from_hex(j.at("g_x").get<std::string>()), params.d, params.mod);
        if (!is_invertible(g_x)) raise(Errc::Singular, path + ": public key matrix is singular");
        return PublicKey{j.at("owner_id").get<std::string>(), std::move(g_x), fp};
    } catch (const json::exception& e) {
        raise(Errc::IoError, path + ": " + e.what());
    }
}

} // namespace zkgl
