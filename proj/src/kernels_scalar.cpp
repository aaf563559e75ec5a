#include "steiner/kernels.hpp"

namespace steiner::kernels {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                 std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(c) * x[i] + y[i]) % p);
    }
}

void scale_scalar(std::uint32_t* y, std::uint32_t c, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * y[i] % p);
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", axpy_scalar, scale_scalar};
    return ops;
}

} // namespace steiner::kernels
