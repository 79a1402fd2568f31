#pragma once

#include <cstdint>

namespace ripsym {

/// SplitMix64 generator. Small, fast, and stable across platforms and
/// standard libraries, which keeps every seeded run byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

/// Stream derivation for per-column generation: seed xor column index,
/// then one mixing round so nearby seeds do not correlate.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t column) {
    Rng r(seed ^ column);
    return r.next_u64();
}

}  // namespace ripsym
