#pragma once

// Row-operation kernels for F_p elimination, p < 2^31.
//
// The scalar variants are the reference semantics; the AVX2 variants must be
// bit-identical on every input and are checked against the scalar ones by the
// test suite. Dispatch happens once at startup: the active implementation is
// AVX2 when the CPU supports it, otherwise scalar. STEINER_KERNEL=scalar|avx2
// in the environment forces a choice (forcing avx2 on a CPU without it throws).
//
// The vector variants use Shoup's trick: for a fixed multiplier c < p,
// precompute w = floor(c * 2^32 / p); then for x < p
//   q = floor(w * x / 2^32),  r = (c*x - q*p) mod 2^32
// satisfies r = c*x mod p or that plus p, so one conditional subtract lands in
// [0, p). All of it stays inside 32-bit lanes.

#include <cstddef>
#include <cstdint>

namespace steiner::kernels {

struct Ops {
    const char* name;
    // y[i] <- (y[i] + c*x[i]) mod p for i in [0, n). Requires x, y entries and
    // c in [0, p); x and y must not alias.
    void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                 std::size_t n, std::uint32_t p);
    // y[i] <- (y[i]*c) mod p.
    void (*scale)(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p);
};

const Ops& scalar_ops();
const Ops* avx2_ops(); // nullptr when the build or CPU lacks AVX2

// Runtime-selected implementation (honors STEINER_KERNEL on first use).
const Ops& active();

// Test hook: override the active implementation.
void set_active(const Ops& ops);

} // namespace steiner::kernels
