#pragma once

#include <cstdint>

namespace perdet {

// SplitMix64 stream. Used instead of <random> engines so that seeded runs
// are bit-identical across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Modulo bias is immaterial for the
    // tiny bounds used here (<= 10^4) and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Derive an independent child stream; the parent advances once.
    SplitMix64 split() { return SplitMix64(next()); }

    // Stateless mix, for keying per-index substreams off a master seed.
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return x;
    }

private:
    std::uint64_t state_;
};

} // namespace perdet
