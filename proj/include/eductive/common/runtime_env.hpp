#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <random>

#include "eductive/common/hash.hpp"

namespace eductive {

/// Microsecond clock abstraction. The deterministic simulator owns a virtual
/// clock; everything that needs "now" asks this interface.
class Clock {
public:
    virtual ~Clock() = default;
    virtual uint64_t now_micros() const = 0;
};

class RealClock final : public Clock {
public:
    uint64_t now_micros() const override {
        using namespace std::chrono;
        return static_cast<uint64_t>(
            duration_cast<microseconds>(steady_clock::now() - start_).count());
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class SimClock final : public Clock {
public:
    uint64_t now_micros() const override { return micros_; }
    void advance(uint64_t micros) { micros_ += micros; }

private:
    uint64_t micros_ = 0;
};

/// Source of fresh 128-bit ids for system demands. Seeded in sim mode so
/// identical seeds yield identical runs.
class IdSource {
public:
    explicit IdSource(uint64_t seed) : rng_(seed) {}

    static IdSource from_entropy() { return IdSource(std::random_device{}()); }

    Digest128 fresh() {
        Digest128 out{};
        for (size_t i = 0; i < out.size(); i += 8) {
            uint64_t r = rng_();
            for (size_t j = 0; j < 8; ++j) out[i + j] = static_cast<uint8_t>(r >> (8 * j));
        }
        return out;
    }

    uint64_t next_u64() { return rng_(); }

    /// Uniform double in [0,1) from the top 53 bits; identical across
    /// platforms, unlike std::uniform_real_distribution.
    double next_unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
};

}  // namespace eductive
