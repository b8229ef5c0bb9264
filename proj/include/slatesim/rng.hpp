#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace slatesim {

using Rng = std::mt19937_64;

namespace detail {

// splitmix64 finalizer; good avalanche for seed derivation.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Derives an independent stream seed from (master seed, phase tag, index,
/// lane). Episode streams never depend on worker assignment or execution
/// order, so parallel evaluation cannot perturb results.
inline uint64_t derive_seed(uint64_t master, std::string_view phase, uint64_t index,
                            uint64_t lane = 0) {
    uint64_t h = detail::mix64(master ^ detail::fnv1a(phase));
    h = detail::mix64(h ^ index);
    return detail::mix64(h ^ (lane * 0x9e3779b97f4a7c15ULL));
}

inline Rng make_rng(uint64_t master, std::string_view phase, uint64_t index, uint64_t lane = 0) {
    return Rng(derive_seed(master, phase, index, lane));
}

}  // namespace slatesim
