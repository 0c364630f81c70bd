#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dedupix {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedHeader : Error {
    using Error::Error;
};
struct TruncatedPayload : Error {
    using Error::Error;
};
struct UnsupportedMaxval : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct BadKernelSize : Error {
    using Error::Error;
};
struct ImageTooSmall : Error {
    using Error::Error;
};
struct BadThresholds : Error {
    using Error::Error;
};
struct BadDecay : Error {
    using Error::Error;
};
struct BadEpsilon : Error {
    using Error::Error;
};
struct BadK : Error {
    using Error::Error;
};
struct BadC : Error {
    using Error::Error;
};
struct BadFuzziness : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct EmptyImage : Error {
    using Error::Error;
};
struct ChunkTooSmall : Error {
    using Error::Error;
};
struct NonCanonicalInput : Error {
    using Error::Error;
};
struct CountMismatch : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};
struct CorruptIndex : Error {
    using Error::Error;
};
struct DigestMismatch : Error {
    using Error::Error;
};
struct PeerProtocolError : Error {
    using Error::Error;
};
struct ProtocolViolation : Error {
    using Error::Error;
};
struct ConnectionLost : Error {
    using Error::Error;
};
struct RootMismatch : Error {
    using Error::Error;
};
struct BadConfig : Error {
    using Error::Error;
};
struct BadOntology : Error {
    using Error::Error;
};

/// Reconstruction failure listing the grid coordinates that could not be found.
struct MissingChunk : Error {
    std::vector<std::pair<uint16_t, uint16_t>> missing;

    explicit MissingChunk(std::vector<std::pair<uint16_t, uint16_t>> coords)
        : Error(describe(coords)), missing(std::move(coords)) {}

  private:
    static std::string describe(const std::vector<std::pair<uint16_t, uint16_t>>& coords) {
        std::string msg = "missing chunks:";
        for (const auto& [i, j] : coords) {
            msg += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        return msg;
    }
};

}  // namespace dedupix
