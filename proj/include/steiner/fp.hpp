#pragma once

// Prime-field scalars and dense matrices over F_p.
//
// Primes are restricted to p < 2^31: entries then fit a 32-bit word and every
// product fits a 64-bit accumulator, which is what the row-operation kernels
// rely on. The default p = 32003 is large enough that rank deficiency of a
// random specialization is overwhelmingly structural.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "steiner/rng.hpp"

namespace steiner {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kMaxPrime = 0x7FFFFFFFu; // largest allowed modulus (2^31 - 1)

bool is_prime_u32(std::uint32_t p);

// Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
void require_prime(std::uint32_t p);

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p); // a != 0 mod p

// Dense row-major matrix with entries in [0, p). The modulus lives in the
// surrounding computation, not in the matrix.
struct FpMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> data;

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("FpMatrix: negative dimension");
    }

    std::uint32_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const std::uint32_t* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    bool operator==(const FpMatrix&) const = default;

    FpMatrix transposed() const;
};

// Deterministic uniform random matrix over F_p. Entries are drawn row-major
// from SplitMix64(seed) via next_mod.
FpMatrix rng_matrix(int rows, int cols, Seed seed, std::uint32_t p);

} // namespace steiner
