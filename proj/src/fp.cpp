#include "steiner/fp.hpp"

namespace steiner {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint32_t d = 5; static_cast<std::uint64_t>(d) * d <= p; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

void require_prime(std::uint32_t p) {
    if (p > kMaxPrime) throw std::invalid_argument("modulus too large (need p < 2^31)");
    if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b; // p < 2^31 so no wrap
    return s >= p ? s - p : s;
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::invalid_argument("inv_mod: zero element");
    // Extended Euclid on (a, p).
    std::int64_t r0 = a % p, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t inv = s0 % p;
    if (inv < 0) inv += p;
    return static_cast<std::uint32_t>(inv);
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

FpMatrix rng_matrix(int rows, int cols, Seed seed, std::uint32_t p) {
    require_prime(p);
    if (rows < 0 || cols < 0) throw std::invalid_argument("rng_matrix: negative dimension");
    FpMatrix m(rows, cols);
    SplitMix64 g(seed);
    for (auto& e : m.data) e = g.next_mod(p);
    return m;
}

} // namespace steiner
