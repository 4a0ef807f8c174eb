#include "eductive/common/hash.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>
#include <zlib.h>

#include <cstring>

namespace eductive {

Digest256 sha256(std::span<const uint8_t> data) {
    Digest256 out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Digest128 sha256_128(std::span<const uint8_t> data) {
    Digest256 full = sha256(data);
    Digest128 out{};
    std::memcpy(out.data(), full.data(), out.size());
    return out;
}

Digest256 hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data) {
    Digest256 out{};
    unsigned int len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data.data(), data.size(),
         out.data(), &len);
    return out;
}

uint32_t crc32(std::span<const uint8_t> data) {
    return static_cast<uint32_t>(::crc32_z(0, data.data(), data.size()));
}

std::string hex_encode(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

namespace {
int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes hex_decode(std::string_view hex) {
    if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw FormatError("invalid hex character");
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

std::string content_hash_hex(std::span<const uint8_t> data) {
    Digest128 d = sha256_128(data);
    return hex_encode(d);
}

}  // namespace eductive
