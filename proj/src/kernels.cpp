// SPDX-License-Identifier: Apache-2.0
#include "qts/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qts::kern {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) tables.push_back(&avx2_kernels());
#endif
  return tables;
}

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("QTS_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return avx2_kernels();
#endif
    return scalar_kernels();
  }();
  return table;
}

}  // namespace qts::kern
