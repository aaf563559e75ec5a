#include "steiner/rng.hpp"

namespace steiner {

std::uint32_t SplitMix64::next_mod(std::uint32_t p) {
    if (p == 0) return 0;
    // rem = 2^64 mod p; words u >= 2^64 - rem are rejected so that exactly
    // floor(2^64/p) * p words survive, p of each residue class.
    const std::uint64_t rem = (0 - static_cast<std::uint64_t>(p)) % p;
    for (;;) {
        std::uint64_t u = next();
        if (rem == 0 || u < 0 - rem) return static_cast<std::uint32_t>(u % p);
    }
}

Seed derive(Seed base, std::uint64_t tag) {
    SplitMix64 g(base.value + (tag + 1) * 0x9E3779B97F4A7C15ULL);
    return Seed{g.next()};
}

} // namespace steiner
