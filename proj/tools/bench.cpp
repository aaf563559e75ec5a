// Micro-benchmark for the F_p row kernels and the rank path: scalar reference
// vs the runtime-dispatched variant. Informational only; correctness is what
// the equivalence tests assert.

#include <chrono>
#include <cstdio>
#include <vector>

#include "steiner/fp.hpp"
#include "steiner/kernels.hpp"
#include "steiner/rank.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_axpy(const kernels::Ops& ops, std::uint32_t p) {
    const std::size_t n = 1 << 14;
    const int reps = 20000;
    SplitMix64 g(Seed{1});
    std::vector<std::uint32_t> x(n), y(n);
    for (auto& v : x) v = g.next_mod(p);
    for (auto& v : y) v = g.next_mod(p);
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) ops.axpy(y.data(), x.data(), (r % (p - 1)) + 1, n, p);
    const double dt = seconds(t0);
    std::printf("  axpy  %-6s  p=%-10u  %7.2f M elem/s\n", ops.name, p,
                static_cast<double>(n) * reps / dt / 1e6);
}

void bench_rank(const kernels::Ops& ops) {
    kernels::set_active(ops);
    const FpMatrix m = rng_matrix(1200, 1400, Seed{2}, kDefaultPrime);
    const auto t0 = std::chrono::steady_clock::now();
    const int r = rank_ffp(m, kDefaultPrime);
    const double dt = seconds(t0);
    std::printf("  rank  %-6s  1200x1400 -> %d  in %.3fs\n", ops.name, r, dt);
}

} // namespace

int main() {
    std::printf("active kernel: %s\n", kernels::active().name);
    for (std::uint32_t p : {32003u, 2147483647u}) {
        bench_axpy(kernels::scalar_ops(), p);
        if (const kernels::Ops* v = kernels::avx2_ops()) bench_axpy(*v, p);
    }
    const kernels::Ops& before = kernels::active();
    bench_rank(kernels::scalar_ops());
    if (const kernels::Ops* v = kernels::avx2_ops()) bench_rank(*v);
    kernels::set_active(before);
    return 0;
}
