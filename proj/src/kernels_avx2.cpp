// AVX2 variants of the F_p row kernels. Compiled with -mavx2; only ever
// executed after a runtime cpuid check in the dispatcher.

#include "steiner/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace steiner::kernels {

namespace {

// High 32 bits of the 8 lane-wise u32 products.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ULL));
    return _mm256_blend_epi32(even, _mm256_and_si256(odd, hi_mask), 0xAA);
}

// v in [0, 2p) -> v mod p, lane-wise.
inline __m256i reduce_once(__m256i v, __m256i vp) {
    return _mm256_min_epu32(v, _mm256_sub_epi32(v, vp));
}

// c*x mod p via Shoup: w = floor(c*2^32/p), q = hi32(w*x), r = c*x - q*p
// computed mod 2^32 lands in [0, 2p).
inline __m256i mulmod_shoup(__m256i x, __m256i vc, __m256i vw, __m256i vp) {
    __m256i q = mulhi_epu32(vw, x);
    __m256i lo = _mm256_mullo_epi32(vc, x);
    __m256i qp = _mm256_mullo_epi32(q, vp);
    return reduce_once(_mm256_sub_epi32(lo, qp), vp);
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
               std::size_t n, std::uint32_t p) {
    const std::uint32_t w =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i r = mulmod_shoup(xv, vc, vw, vp);
        __m256i s = reduce_once(_mm256_add_epi32(yv, r), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
    }
    for (; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(c) * x[i] + y[i]) % p);
    }
}

void scale_avx2(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p) {
    const std::uint32_t w =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i r = mulmod_shoup(yv, vc, vw, vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    for (; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * y[i] % p);
    }
}

} // namespace

const Ops* avx2_ops() {
    static const Ops ops{"avx2", axpy_avx2, scale_avx2};
    return __builtin_cpu_supports("avx2") ? &ops : nullptr;
}

} // namespace steiner::kernels

#else

namespace steiner::kernels {
const Ops* avx2_ops() { return nullptr; }
} // namespace steiner::kernels

#endif
