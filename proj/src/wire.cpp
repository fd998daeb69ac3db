#include "zkgl/wire.hpp"

#include <algorithm>
#include <cstring>

namespace zkgl {

namespace {

void put_u16le(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint16_t get_u16le(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (static_cast<uint16_t>(p[1]) << 8));
}

uint32_t get_u32le(const uint8_t* p) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(p[i]) << (8 * i);
    return v;
}

bool known_type(uint8_t t) {
    switch (static_cast<MessageType>(t)) {
        case MessageType::ProverHello:
        case MessageType::VerifierHello:
        case MessageType::Witness:
        case MessageType::Challenge:
        case MessageType::Response:
        case MessageType::RoundResult:
        case MessageType::SessionResult:
        case MessageType::Error:
            return true;
    }
    return false;
}

} // namespace

std::vector<uint8_t> encode_matrix(const Matrix& m) {
    const size_t d = m.dim();
    const unsigned w = m.mod().elem_width;
    std::vector<uint8_t> out;
    out.reserve(d * d * w);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            uint64_t v = m.at(i, j);
            for (unsigned byte = 0; byte < w; ++byte) out.push_back(static_cast<uint8_t>(v >> (8 * byte)));
        }
    return out;
}

Matrix decode_matrix(std::span<const uint8_t> buf, size_t d, PrimeModulus mod) {
    const unsigned w = mod.elem_width;
    if (buf.size() != d * d * w)
        raise(Errc::BadLength, "expected " + std::to_string(d * d * w) + " matrix bytes, got " +
                                   std::to_string(buf.size()));
    Matrix m(mod, d);
    size_t off = 0;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            uint64_t v = 0;
            for (unsigned byte = 0; byte < w; ++byte)
                v |= static_cast<uint64_t>(buf[off + byte]) << (8 * byte);
            off += w;
            if (v >= mod.p)
                raise(Errc::OutOfRangeElement,
                      "element " + std::to_string(v) + " not below modulus " + std::to_string(mod.p));
            m.set(i, j, v);
        }
    return m;
}

std::vector<uint8_t> frame_message(MessageType t, std::span<const uint8_t> payload) {
    if (payload.size() > kMaxPayload) raise(Errc::PayloadTooLarge, "payload exceeds 2^24 - 1 bytes");
    std::vector<uint8_t> out;
    out.reserve(kFrameHeaderSize + payload.size());
    out.insert(out.end(), kFrameMagic.begin(), kFrameMagic.end());
    out.push_back(kWireVersion);
    out.push_back(static_cast<uint8_t>(t));
    put_u32le(out, static_cast<uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

FrameHeader parse_frame_header(std::span<const uint8_t> header) {
    if (header.size() < kFrameHeaderSize) raise(Errc::Truncated, "frame header short");
    if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), header.begin()))
        raise(Errc::BadMagic, "frame does not start with ZKP1");
    if (header[4] != kWireVersion)
        raise(Errc::BadVersion, "wire version " + std::to_string(header[4]) + " unsupported");
    if (!known_type(header[5]))
        raise(Errc::UnknownType, "unknown message type " + std::to_string(header[5]));
    uint32_t len = get_u32le(header.data() + 6);
    if (len > kMaxPayload) raise(Errc::PayloadTooLarge, "declared payload exceeds cap");
    return {static_cast<MessageType>(header[5]), len};
}

ParsedFrame parse_frame(std::span<const uint8_t> stream) {
    FrameHeader h = parse_frame_header(stream);
    if (stream.size() < kFrameHeaderSize + h.payload_len)
        raise(Errc::Truncated, "frame payload short");
    ParsedFrame f;
    f.type = h.type;
    f.payload.assign(stream.begin() + kFrameHeaderSize,
                     stream.begin() + kFrameHeaderSize + h.payload_len);
    f.consumed = kFrameHeaderSize + h.payload_len;
    return f;
}

std::vector<uint8_t> encode_hello(const std::string& id, const std::array<uint8_t, 8>& fingerprint,
                                  std::span<const uint8_t> pubkey_bytes,
                                  std::optional<uint16_t> rounds) {
    if (id.empty() || id.size() > 255) raise(Errc::InvalidArgument, "peer id must be 1..255 bytes");
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>(id.size()));
    out.insert(out.end(), id.begin(), id.end());
    out.insert(out.end(), fingerprint.begin(), fingerprint.end());
    out.insert(out.end(), pubkey_bytes.begin(), pubkey_bytes.end());
    if (rounds) put_u16le(out, *rounds);
    return out;
}

HelloPayload parse_hello(std::span<const uint8_t> payload, size_t matrix_bytes, bool with_rounds) {
    if (payload.empty()) raise(Errc::BadLength, "empty hello");
    size_t id_len = payload[0];
    size_t expect = 1 + id_len + 8 + matrix_bytes + (with_rounds ? 2 : 0);
    if (payload.size() != expect)
        raise(Errc::BadLength, "hello payload is " + std::to_string(payload.size()) +
                                   " bytes, expected " + std::to_string(expect));
    HelloPayload h;
    h.id.assign(payload.begin() + 1, payload.begin() + 1 + id_len);
    std::copy_n(payload.begin() + 1 + id_len, 8, h.fingerprint.begin());
    h.pubkey_bytes.assign(payload.begin() + 1 + id_len + 8,
                          payload.begin() + 1 + id_len + 8 + matrix_bytes);
    if (with_rounds) h.rounds = get_u16le(payload.data() + payload.size() - 2);
    return h;
}

std::vector<uint8_t> encode_challenge(int b, const Matrix& q) {
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>(b & 1));
    auto qb = encode_matrix(q);
    out.insert(out.end(), qb.begin(), qb.end());
    return out;
}

std::pair<int, Matrix> parse_challenge(std::span<const uint8_t> payload, size_t d, PrimeModulus mod) {
    if (payload.empty()) raise(Errc::BadLength, "empty challenge");
    uint8_t b = payload[0];
    if (b > 1) raise(Errc::OutOfRangeElement, "challenge bit must be 0 or 1");
    return {b, decode_matrix(payload.subspan(1), d, mod)};
}

std::vector<uint8_t> encode_round_result(uint16_t round_index, bool verdict) {
    std::vector<uint8_t> out;
    put_u16le(out, round_index);
    out.push_back(verdict ? 1 : 0);
    return out;
}

std::pair<uint16_t, bool> parse_round_result(std::span<const uint8_t> payload) {
    if (payload.size() != 3) raise(Errc::BadLength, "round result must be 3 bytes");
    return {get_u16le(payload.data()), payload[2] != 0};
}

std::vector<uint8_t> encode_session_result(bool accepted, uint16_t rounds_passed,
                                           uint16_t rounds_total) {
    std::vector<uint8_t> out;
    out.push_back(accepted ? 1 : 0);
    put_u16le(out, rounds_passed);
    put_u16le(out, rounds_total);
    return out;
}

SessionResultPayload parse_session_result(std::span<const uint8_t> payload) {
    if (payload.size() != 5) raise(Errc::BadLength, "session result must be 5 bytes");
    return {payload[0] != 0, get_u16le(payload.data() + 1), get_u16le(payload.data() + 3)};
}

std::vector<uint8_t> encode_error(NetErrc code, const std::string& message) {
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>(code));
    out.insert(out.end(), message.begin(), message.end());
    return out;
}

std::pair<NetErrc, std::string> parse_error(std::span<const uint8_t> payload) {
    if (payload.empty()) raise(Errc::BadLength, "empty error payload");
    return {static_cast<NetErrc>(payload[0]),
            std::string(payload.begin() + 1, payload.end())};
}

std::string to_hex(std::span<const uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<uint8_t> from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) raise(Errc::BadLength, "hex string has odd length");
    std::vector<uint8_t> out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) raise(Errc::BadLength, "invalid hex digit");
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

} // namespace zkgl
