// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic kernels for dense complex matrices.
//
// Every kernel exists in a portable scalar reference form and, on x86-64,
// an AVX2+FMA form. The CPU is probed once at startup and one table is
// selected for the whole process; QTS_KERNELS=scalar in the environment
// forces the reference path. SIMD and scalar tables are equivalence-tested
// against each other in tests/test_kernels.cpp.
//
// Layout contract: complex values are interleaved (re, im) pairs, matrices
// are row-major and contiguous. std::complex<double> guarantees this.
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qts::kern {

using cd = std::complex<double>;

// c (n x m) = a (n x k) * b (k x m); c is overwritten.
using MatmulFn = void (*)(const cd* a, const cd* b, cd* c,
                          std::size_t n, std::size_t k, std::size_t m);
// y[i] += alpha * x[i]
using AxpyFn = void (*)(cd* y, cd alpha, const cd* x, std::size_t n);
// y[i] = alpha * x[i]
using ScaleFn = void (*)(cd* y, cd alpha, const cd* x, std::size_t n);

struct KernelTable {
  std::string_view name;
  MatmulFn matmul;
  AxpyFn axpy;
  ScaleFn scale;
};

const KernelTable& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const KernelTable& avx2_kernels();
#endif

// All tables that are safe to call on this machine (scalar first).
std::vector<const KernelTable*> available_kernels();

// The table used by CMat; fixed for the lifetime of the process.
const KernelTable& active();

}  // namespace qts::kern
