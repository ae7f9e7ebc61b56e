#pragma once

#include <cstddef>
#include <string_view>

// Batch distance kernels for the DBSCAN neighborhood scan, the innermost loop
// of both snapshot clustering and refinement. A scalar reference kernel is
// always available; an AVX2 variant is selected at runtime when the CPU
// supports it. Both compute identical IEEE results (mul/add, no FMA), so the
// equivalence tests assert exact equality.

namespace convoy::kernels {

// out[i] = (xs[i] - qx)^2 + (ys[i] - qy)^2
using Dist2Fn = void (*)(const double* xs, const double* ys, std::size_t n, double qx,
                         double qy, double* out);

void dist2_scalar(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                  double* out);

#if defined(__x86_64__) || defined(_M_X64)
void dist2_avx2(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                double* out);
#endif

// Kernel chosen for this machine (resolved once, at first use).
Dist2Fn dist2_kernel();

// Name of the active kernel, for stats output.
std::string_view active_kernel_name();

// Force the scalar path (testing hook).
void force_scalar(bool on);

}  // namespace convoy::kernels
