#pragma once

#include <cstdint>

namespace bctp {

// SplitMix64 finalizer. Used instead of <random> distributions so draws are
// bit-identical across standard libraries and platforms.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Stateless counter-based draw: a pure function of (seed, sample, slot), so
// serial and fanned-out sampling produce the same stream.
constexpr std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t sample, std::uint64_t slot) {
    return splitmix64(splitmix64(seed + 0xA24BAED4963EE407ull * (sample + 1)) + slot);
}

// Uniform integer in [lo, hi], inclusive. Spans here are at most 6, so the
// modulo bias is below 2^-60 and is documented rather than corrected.
constexpr int draw_in_range(std::uint64_t seed, std::uint64_t sample, std::uint64_t slot, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(draw_bits(seed, sample, slot) % span);
}

// Small sequential generator for test-data construction.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() { return splitmix64(state_++); }

    // Uniform in [0, n), n >= 1.
    constexpr std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform integer in [lo, hi] inclusive.
    constexpr int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1).
    constexpr double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace bctp
