#pragma once

// Deterministic randomness. The whole library draws from SplitMix64 so that a
// (seed, prime) pair reproduces every matrix bit-for-bit across platforms.
//
// Generator specification (64-bit wrapping arithmetic throughout):
//   state' = state + 0x9E3779B97F4A7C15
//   z = state'
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// Child seeds: derive(base, tag) seeds a fresh SplitMix64 at
// base + (tag + 1) * 0x9E3779B97F4A7C15 and takes its first output. Distinct
// tags give independent streams, so removing one consumer never shifts the
// draws of another.
//
// Uniform residues mod p: draw 64-bit words, reject those >= p * floor(2^64/p),
// reduce the survivor mod p. Rejection keeps the distribution exactly uniform.

#include <cstdint>
#include <vector>

namespace steiner {

struct Seed {
    std::uint64_t value = 1;
};

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, p) by rejection.
    std::uint32_t next_mod(std::uint32_t p);

private:
    std::uint64_t state_;
};

Seed derive(Seed base, std::uint64_t tag);

} // namespace steiner
