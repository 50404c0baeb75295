#pragma once

// Data-parallel inner loops used by the bracket-vector and poset code.
//
// Every kernel has a scalar reference implementation; the AVX2 variants are
// compiled into a separate translation unit and picked at runtime. Both must
// produce identical results on every input (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>

namespace tamaripop::kernels {

using Lane = std::int8_t;
using Word = std::uint64_t;

/// Bracket vectors of length <= kLaneWidth fit one AVX2 register.
inline constexpr std::size_t kLaneWidth = 32;

struct KernelSet {
  const char* name;

  /// out[i] = min(a[i], b[i]).
  void (*meet)(std::span<const Lane> a, std::span<const Lane> b, std::span<Lane> out);
  /// a[i] <= b[i] for all i.
  bool (*leq)(std::span<const Lane> a, std::span<const Lane> b);
  /// Bit i set iff v[i] > v[i+1]. Requires v.size() <= 64.
  Word (*descent_mask)(std::span<const Lane> v);
  /// Computes the Pop image entrywise: out[i] = v[i] off the descent set,
  /// otherwise the largest x in [floor[i], v[i]-1] such that v[j] <= x for
  /// all j in [i+1, fixed[x]]. `floor` is the height sequence of the
  /// ambient path and `fixed[k]` the last index at height k. Returns false
  /// if some descent admits no such x (out is then unspecified).
  bool (*pop_eta)(std::span<const Lane> v, std::span<const Lane> floor, std::span<const Lane> fixed,
                  std::span<Lane> out);

  void (*bits_and)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
  void (*bits_or_into)(std::span<Word> dst, std::span<const Word> src);
  bool (*bits_equal)(std::span<const Word> a, std::span<const Word> b);
  bool (*bits_intersect)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*bits_popcount)(std::span<const Word> a);
};

const KernelSet& scalar_kernels();

/// nullptr unless the AVX2 variant was compiled in and the CPU supports it.
const KernelSet* avx2_kernels();

/// The set used by the library. Chosen once per process; setting
/// `TAMARIPOP_KERNELS=scalar` pins the scalar reference.
const KernelSet& active_kernels();

namespace detail {
const KernelSet* avx2_kernel_table();
}

}  // namespace tamaripop::kernels
