#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "eductive/common/bytes.hpp"

namespace eductive {

using Digest256 = std::array<uint8_t, 32>;
using Digest128 = std::array<uint8_t, 16>;

Digest256 sha256(std::span<const uint8_t> data);

/// SHA-256 truncated to the first 128 bits; the project-wide stable id hash.
Digest128 sha256_128(std::span<const uint8_t> data);

/// HMAC-SHA-256 keyed MAC; backs node credentials.
Digest256 hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data);

uint32_t crc32(std::span<const uint8_t> data);

std::string hex_encode(std::span<const uint8_t> data);

/// Strict inverse of hex_encode; throws FormatError on odd length or
/// non-hex characters.
Bytes hex_decode(std::string_view hex);

/// Convenience: 32-hex-char truncated hash of a byte string.
std::string content_hash_hex(std::span<const uint8_t> data);

}  // namespace eductive
