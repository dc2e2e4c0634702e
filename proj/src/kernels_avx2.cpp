// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA kernels. A 256-bit register holds two interleaved complex
// doubles; the multiply uses one broadcast of re(alpha), one sign-alternated
// broadcast of im(alpha) and a lane swap, giving two FMAs per register:
//   acc += [ar*xr, ar*xi] + [-ai*xi, ai*xr]
// This TU is the only one compiled with -mavx2 -mfma; callers must check
// avx2_available() first.
#include "qts/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qts::kern {

namespace {

inline void cmuladd_row(double* acc, double ar, double ai, const double* x,
                        std::size_t m) {
  const __m256d are = _mm256_set1_pd(ar);
  const __m256d aim = _mm256_setr_pd(-ai, ai, -ai, ai);
  std::size_t j = 0;
  for (; j + 2 <= m; j += 2) {
    __m256d xv = _mm256_loadu_pd(x + 2 * j);
    __m256d xs = _mm256_permute_pd(xv, 0x5);
    __m256d av = _mm256_loadu_pd(acc + 2 * j);
    av = _mm256_fmadd_pd(are, xv, av);
    av = _mm256_fmadd_pd(aim, xs, av);
    _mm256_storeu_pd(acc + 2 * j, av);
  }
  for (; j < m; ++j) {
    const double xr = x[2 * j], xi = x[2 * j + 1];
    acc[2 * j] += ar * xr - ai * xi;
    acc[2 * j + 1] += ar * xi + ai * xr;
  }
}

void matmul_avx2(const cd* a, const cd* b, cd* c,
                 std::size_t n, std::size_t k, std::size_t m) {
  auto* cr = reinterpret_cast<double*>(c);
  const auto* br = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n * m; ++i) c[i] = cd{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cr + 2 * i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const cd aip = a[i * k + p];
      if (aip.real() == 0.0 && aip.imag() == 0.0) continue;
      cmuladd_row(crow, aip.real(), aip.imag(), br + 2 * p * m, m);
    }
  }
}

void axpy_avx2(cd* y, cd alpha, const cd* x, std::size_t n) {
  cmuladd_row(reinterpret_cast<double*>(y), alpha.real(), alpha.imag(),
              reinterpret_cast<const double*>(x), n);
}

void scale_avx2(cd* y, cd alpha, const cd* x, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d are = _mm256_set1_pd(ar);
  const __m256d aim = _mm256_setr_pd(-ai, ai, -ai, ai);
  auto* yr = reinterpret_cast<double*>(y);
  const auto* xr = reinterpret_cast<const double*>(x);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    __m256d xv = _mm256_loadu_pd(xr + 2 * j);
    __m256d xs = _mm256_permute_pd(xv, 0x5);
    __m256d out = _mm256_mul_pd(are, xv);
    out = _mm256_fmadd_pd(aim, xs, out);
    _mm256_storeu_pd(yr + 2 * j, out);
  }
  for (; j < n; ++j) {
    const double xre = xr[2 * j], xim = xr[2 * j + 1];
    yr[2 * j] = ar * xre - ai * xim;
    yr[2 * j + 1] = ar * xim + ai * xre;
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2", matmul_avx2, axpy_avx2, scale_avx2};
  return table;
}

}  // namespace qts::kern

#endif  // x86-64
