#include "convoy/kernels.hpp"

#include <atomic>

namespace convoy::kernels {

void dist2_scalar(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                  double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double dx = xs[i] - qx;
        double dy = ys[i] - qy;
        out[i] = dx * dx + dy * dy;
    }
}

namespace {

std::atomic<bool> g_force_scalar{false};

Dist2Fn resolve() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return dist2_avx2;
#endif
    return dist2_scalar;
}

}  // namespace

Dist2Fn dist2_kernel() {
    static Dist2Fn best = resolve();
    return g_force_scalar.load(std::memory_order_relaxed) ? dist2_scalar : best;
}

std::string_view active_kernel_name() {
    return dist2_kernel() == dist2_scalar ? "scalar" : "avx2";
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace convoy::kernels
