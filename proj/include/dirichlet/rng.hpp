#pragma once

#include <cstdint>

namespace dirichlet {

// Counter-based uniform generator.  Every variate is a pure function of
// (seed, stream, counter), so parallel workers can draw from disjoint
// substreams without shared state and a fixed seed reproduces the exact
// stream regardless of thread count.
namespace rng {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

// uniform in [0, 1), 53-bit mantissa
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

} // namespace rng
} // namespace dirichlet
