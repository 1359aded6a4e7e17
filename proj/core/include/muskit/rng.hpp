// rng.hpp - seed derivation for independent, reproducible random streams

#pragma once

#include <cstdint>
#include <random>

namespace muskit::rng {

// splitmix64 finalizer; derives the seed for work item `stream` from a master
// seed so that parallel items never share generator state.
inline std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace muskit::rng
