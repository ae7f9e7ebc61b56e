// Compiled with -mavx2; only reached after the runtime dispatch check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "convoy/kernels.hpp"

namespace convoy::kernels {

void dist2_avx2(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                double* out) {
    const __m256d vqx = _mm256_set1_pd(qx);
    const __m256d vqy = _mm256_set1_pd(qy);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
        __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
        // mul + add, not FMA, to match the scalar kernel bit-for-bit
        __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        _mm256_storeu_pd(out + i, d2);
    }
    for (; i < n; ++i) {
        double dx = xs[i] - qx;
        double dy = ys[i] - qy;
        out[i] = dx * dx + dy * dy;
    }
}

}  // namespace convoy::kernels

#endif
