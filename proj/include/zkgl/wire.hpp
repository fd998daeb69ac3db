#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zkgl/matrix.hpp"

namespace zkgl {

// Bit-exact serialization: matrix encoding, message framing, and the
// payload layouts used by the networked demo. Everything little-endian.
//
// Frame layout (normative):
//   magic   4 bytes  "ZKP1" (5A 4B 50 31)
//   version 1 byte   0x01
//   type    1 byte   MessageType
//   length  4 bytes  payload byte count, unsigned LE, < 2^24
//   payload `length` bytes

enum class MessageType : uint8_t {
    ProverHello = 0x01,
    VerifierHello = 0x02,
    Witness = 0x03,
    Challenge = 0x04,
    Response = 0x05,
    RoundResult = 0x06,
    SessionResult = 0x07,
    Error = 0x7F,
};

// codes carried by an Error frame's first payload byte
enum class NetErrc : uint8_t {
    UnknownProver = 0x01,
    FingerprintMismatch = 0x02,
    MalformedFrame = 0x03,
};

inline constexpr std::array<uint8_t, 4> kFrameMagic{0x5A, 0x4B, 0x50, 0x31};
inline constexpr uint8_t kWireVersion = 0x01;
inline constexpr size_t kFrameHeaderSize = 10;
inline constexpr uint32_t kMaxPayload = (1u << 24) - 1;

// d^2 elements row-major, elem_width bytes each, little-endian.
std::vector<uint8_t> encode_matrix(const Matrix& m);

// Exact inverse of encode_matrix. Errors: BadLength, OutOfRangeElement.
Matrix decode_matrix(std::span<const uint8_t> buf, size_t d, PrimeModulus mod);

std::vector<uint8_t> frame_message(MessageType t, std::span<const uint8_t> payload);

struct FrameHeader {
    MessageType type;
    uint32_t payload_len;
};

// Validates magic/version/type/length of a 10-byte header.
// Errors: Truncated, BadMagic, BadVersion, UnknownType, PayloadTooLarge.
FrameHeader parse_frame_header(std::span<const uint8_t> header);

struct ParsedFrame {
    MessageType type;
    std::vector<uint8_t> payload;
    size_t consumed; // bytes of `stream` this frame occupied
};

// Reads exactly one frame from the front of `stream`; trailing bytes are
// left untouched. Errors: header errors plus Truncated when the payload
// is short.
ParsedFrame parse_frame(std::span<const uint8_t> stream);

// HELLO payload: id_len (1) | UTF-8 id | params fingerprint (8) | public
// key matrix bytes; the verifier's hello appends the round count (2, LE).
struct HelloPayload {
    std::string id;
    std::array<uint8_t, 8> fingerprint{};
    std::vector<uint8_t> pubkey_bytes;
    std::optional<uint16_t> rounds; // present in VERIFIER_HELLO
};

std::vector<uint8_t> encode_hello(const std::string& id, const std::array<uint8_t, 8>& fingerprint,
                                  std::span<const uint8_t> pubkey_bytes,
                                  std::optional<uint16_t> rounds);
HelloPayload parse_hello(std::span<const uint8_t> payload, size_t matrix_bytes, bool with_rounds);

// CHALLENGE payload: 1 byte b | encoded Q.
std::vector<uint8_t> encode_challenge(int b, const Matrix& q);
std::pair<int, Matrix> parse_challenge(std::span<const uint8_t> payload, size_t d, PrimeModulus mod);

// ROUND_RESULT payload: round index (2, LE) | verdict (1).
std::vector<uint8_t> encode_round_result(uint16_t round_index, bool verdict);
std::pair<uint16_t, bool> parse_round_result(std::span<const uint8_t> payload);

// SESSION_RESULT payload: accepted (1) | rounds_passed (2, LE) | rounds_total (2, LE).
std::vector<uint8_t> encode_session_result(bool accepted, uint16_t rounds_passed, uint16_t rounds_total);
struct SessionResultPayload {
    bool accepted;
    uint16_t rounds_passed;
    uint16_t rounds_total;
};
SessionResultPayload parse_session_result(std::span<const uint8_t> payload);

// ERROR payload: code (1) | UTF-8 message.
std::vector<uint8_t> encode_error(NetErrc code, const std::string& message);
std::pair<NetErrc, std::string> parse_error(std::span<const uint8_t> payload);

std::string to_hex(std::span<const uint8_t> bytes);
std::vector<uint8_t> from_hex(const std::string& hex); // errors: BadLength on odd/bad input

} // namespace zkgl
