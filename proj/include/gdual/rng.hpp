#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "gdual/scalar.hpp"

namespace gdual {

// splitmix64: a small deterministic generator.  All randomized steps take an
// explicit 64-bit seed, so results are reproducible independent of the
// standard library's distribution implementations.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Box-Muller, no caching so the call sequence alone determines the stream
    double gauss() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    cplx cgauss() {
        double re = gauss();
        double im = gauss();
        return {re, im};
    }
};

// Derive an independent stream from (seed, index) pairs.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    return r.next();
}

// FNV-1a over raw bytes; used to key per-fiber streams off the cocycle data
// so that identical fibers always draw identical representatives.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace gdual
