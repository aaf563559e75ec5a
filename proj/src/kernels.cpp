#include "steiner/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace steiner::kernels {

namespace {

const Ops* select_initial() {
    if (const char* env = std::getenv("STEINER_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (std::strcmp(env, "avx2") == 0) {
            const Ops* v = avx2_ops();
            if (!v) throw std::runtime_error("STEINER_KERNEL=avx2 but AVX2 is unavailable");
            return v;
        }
        throw std::runtime_error("STEINER_KERNEL must be 'scalar' or 'avx2'");
    }
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
}

std::atomic<const Ops*>& slot() {
    static std::atomic<const Ops*> s{select_initial()};
    return s;
}

} // namespace

const Ops& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const Ops& ops) { slot().store(&ops, std::memory_order_relaxed); }

} // namespace steiner::kernels
