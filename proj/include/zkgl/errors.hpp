#pragma once

#include <stdexcept>
#include <string>

namespace zkgl {

enum class Errc {
    // field / parameter validation
    NotPrime,
    TooSmall,
    TooLarge,
    ZeroInverse,
    ModulusMismatch,
    InvalidArgument,
    // matrix algebra
    DimensionMismatch,
    Singular,
    ModulusTooSmall,
    FieldTooSmall,
    // keys / protocol
    FingerprintMismatch,
    SingularWitness,
    SingularChallenge,
    SingularResponse,
    // oracle
    EnumerationTooLarge,
    // wire
    BadLength,
    OutOfRangeElement,
    BadMagic,
    BadVersion,
    UnknownType,
    PayloadTooLarge,
    Truncated,
    // network / files
    IoError,
    ProtocolViolation,
    UnknownPeer,
    Timeout,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace zkgl
