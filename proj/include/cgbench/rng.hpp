#ifndef CGBENCH_RNG_HPP
#define CGBENCH_RNG_HPP

#include <cstdint>
#include <random>

namespace cgbench {

using Rng = std::mt19937_64;

// Uniform double in [0,1) built from the top 53 bits of one engine draw.
// Avoids std::uniform_real_distribution so streams are identical across
// standard libraries.
inline double next_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection.
inline std::uint64_t next_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from (experiment seed, cell, run).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t cell, std::uint64_t run) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (cell + 1));
    s = splitmix64(s ^ ((run + 1) << 17));
    return s;
}

} // namespace cgbench

#endif
