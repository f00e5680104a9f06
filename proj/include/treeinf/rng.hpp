#pragma once

#include <cstdint>
#include <random>

namespace treeinf {

// splitmix64 finalizer; good enough to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic per-task stream: replicate i of sweep value x under a master
// seed always sees the same stream, whatever order the tasks run in.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
    return std::mt19937_64(mix64(mix64(mix64(seed) ^ a) ^ b));
}

}  // namespace treeinf
