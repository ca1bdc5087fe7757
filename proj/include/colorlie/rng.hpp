#pragma once

#include <cstdint>

#include "colorlie/cyclotomic.hpp"

namespace colorlie {

/// SplitMix64: tiny deterministic generator, stable across platforms, used by
/// the seeded property suites so reports can echo a reproducible seed.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Small rational with numerator in [-3, 3] and denominator in {1, 2, 3}.
    Rat small_rational() {
        long num = long(below(7)) - 3;
        long den = long(below(3)) + 1;
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
};

} // namespace colorlie
