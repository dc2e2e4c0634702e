// SPDX-License-Identifier: Apache-2.0
//
// Reference kernels. Complex arithmetic is expanded into real/imaginary
// parts so the compiler does not route through __muldc3; these loops are
// the ground truth the SIMD variants are tested against.
#include "qts/kernels.hpp"

namespace qts::kern {

namespace {

void matmul_scalar(const cd* a, const cd* b, cd* c,
                   std::size_t n, std::size_t k, std::size_t m) {
  auto* cr = reinterpret_cast<double*>(c);
  const auto* br = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n * m; ++i) c[i] = cd{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cr + 2 * i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const cd aip = a[i * k + p];
      const double ar = aip.real(), ai = aip.imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = br + 2 * p * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double xr = brow[2 * j], xi = brow[2 * j + 1];
        crow[2 * j] += ar * xr - ai * xi;
        crow[2 * j + 1] += ar * xi + ai * xr;
      }
    }
  }
}

void axpy_scalar(cd* y, cd alpha, const cd* x, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  auto* yr = reinterpret_cast<double*>(y);
  const auto* xr = reinterpret_cast<const double*>(x);
  for (std::size_t j = 0; j < n; ++j) {
    const double xre = xr[2 * j], xim = xr[2 * j + 1];
    yr[2 * j] += ar * xre - ai * xim;
    yr[2 * j + 1] += ar * xim + ai * xre;
  }
}

void scale_scalar(cd* y, cd alpha, const cd* x, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  auto* yr = reinterpret_cast<double*>(y);
  const auto* xr = reinterpret_cast<const double*>(x);
  for (std::size_t j = 0; j < n; ++j) {
    const double xre = xr[2 * j], xim = xr[2 * j + 1];
    yr[2 * j] = ar * xre - ai * xim;
    yr[2 * j + 1] = ar * xim + ai * xre;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", matmul_scalar, axpy_scalar,
                                 scale_scalar};
  return table;
}

}  // namespace qts::kern
