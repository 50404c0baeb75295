#include <cstdlib>
#include <string_view>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop::kernels {

#if !defined(TAMARIPOP_HAVE_AVX2)
namespace detail {
const KernelSet* avx2_kernel_table() { return nullptr; }
}  // namespace detail
#endif

const KernelSet* avx2_kernels() {
#if defined(TAMARIPOP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? detail::avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    const char* pin = std::getenv("TAMARIPOP_KERNELS");
    if (pin != nullptr && std::string_view(pin) == "scalar") return scalar_kernels();
    if (const KernelSet* simd = avx2_kernels()) return *simd;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace tamaripop::kernels
