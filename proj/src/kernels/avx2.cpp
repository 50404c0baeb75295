// AVX2 variants. Bracket vectors with at most 32 entries occupy a single
// register of int8 lanes; longer inputs fall back to the scalar reference.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cstring>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop::kernels {
namespace {

using Buffer = std::array<Lane, kLaneWidth>;

inline __m256i load_padded(std::span<const Lane> v, Lane pad = 0) {
  alignas(32) Buffer buf;
  buf.fill(pad);
  std::memcpy(buf.data(), v.data(), v.size());
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(buf.data()));
}

inline void store_prefix(__m256i reg, std::span<Lane> out) {
  alignas(32) Buffer buf;
  _mm256_store_si256(reinterpret_cast<__m256i*>(buf.data()), reg);
  std::memcpy(out.data(), buf.data(), out.size());
}

// result[i] = a[i + S], zero-filled past the end.
template <int S>
inline __m256i shift_down(__m256i a) {
  const __m256i hi = _mm256_permute2x128_si256(a, a, 0x81);
  if constexpr (S == 16) {
    return hi;
  } else {
    return _mm256_alignr_epi8(hi, a, S);
  }
}

// result[i] = max_{j >= i} a[i]; lanes are nonnegative.
inline __m256i suffix_max(__m256i a) {
  a = _mm256_max_epi8(a, shift_down<1>(a));
  a = _mm256_max_epi8(a, shift_down<2>(a));
  a = _mm256_max_epi8(a, shift_down<4>(a));
  a = _mm256_max_epi8(a, shift_down<8>(a));
  a = _mm256_max_epi8(a, shift_down<16>(a));
  return a;
}

inline __m256i lane_iota() {
  return _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22,
                          23, 24, 25, 26, 27, 28, 29, 30, 31);
}

// Lanes with index < n are all-ones.
inline __m256i prefix_mask(int n) { return _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(n)), lane_iota()); }

void meet_avx2(std::span<const Lane> a, std::span<const Lane> b, std::span<Lane> out) {
  std::size_t i = 0;
  for (; i + kLaneWidth <= a.size(); i += kLaneWidth) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_min_epi8(va, vb));
  }
  if (i < a.size()) {
    const std::size_t rest = a.size() - i;
    store_prefix(_mm256_min_epi8(load_padded(a.subspan(i)), load_padded(b.subspan(i))), out.subspan(i, rest));
  }
}

bool leq_avx2(std::span<const Lane> a, std::span<const Lane> b) {
  std::size_t i = 0;
  for (; i + kLaneWidth <= a.size(); i += kLaneWidth) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    if (!_mm256_testz_si256(_mm256_cmpgt_epi8(va, vb), _mm256_cmpgt_epi8(va, vb))) return false;
  }
  if (i < a.size()) {
    const __m256i gt = _mm256_cmpgt_epi8(load_padded(a.subspan(i)), load_padded(b.subspan(i)));
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  return true;
}

Word descent_mask_avx2(std::span<const Lane> v) {
  if (v.size() > kLaneWidth) return scalar_kernels().descent_mask(v);
  const __m256i cur = load_padded(v);
  const __m256i desc = _mm256_and_si256(_mm256_cmpgt_epi8(cur, shift_down<1>(cur)),
                                        prefix_mask(static_cast<int>(v.size()) - 1));
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(desc));
}

// Sweeps every candidate height x at once across all lanes: lane i accepts x
// when floor[i] <= x < v[i] and max(v[i+1 .. fixed[x]]) <= x. Ascending x
// makes the final blend the maximum accepted value.
bool pop_eta_avx2(std::span<const Lane> v, std::span<const Lane> floor, std::span<const Lane> fixed,
                  std::span<Lane> out) {
  if (v.size() > kLaneWidth) return scalar_kernels().pop_eta(v, floor, fixed, out);

  const __m256i cur = load_padded(v);
  const __m256i low = load_padded(floor);
  const __m256i delta = _mm256_and_si256(_mm256_cmpgt_epi8(cur, shift_down<1>(cur)),
                                         prefix_mask(static_cast<int>(v.size()) - 1));
  const __m256i ones = _mm256_set1_epi8(-1);

  __m256i eta = cur;
  __m256i found = _mm256_setzero_si256();
  const int top = static_cast<int>(fixed.size()) - 1;
  for (int x = 0; x < top; ++x) {
    const __m256i xs = _mm256_set1_epi8(static_cast<char>(x));
    const __m256i window = _mm256_and_si256(cur, prefix_mask(fixed[static_cast<std::size_t>(x)] + 1));
    const __m256i after = shift_down<1>(suffix_max(window));
    __m256i accept = _mm256_andnot_si256(_mm256_cmpgt_epi8(low, xs), _mm256_cmpgt_epi8(cur, xs));
    accept = _mm256_andnot_si256(_mm256_cmpgt_epi8(after, xs), accept);
    eta = _mm256_blendv_epi8(eta, xs, accept);
    found = _mm256_or_si256(found, accept);
  }

  const __m256i missing = _mm256_andnot_si256(found, delta);
  if (!_mm256_testz_si256(missing, ones)) return false;
  store_prefix(_mm256_blendv_epi8(cur, eta, delta), out);
  return true;
}

void bits_and_avx2(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_and_si256(va, vb));
  }
  for (; i < a.size(); ++i) out[i] = a[i] & b[i];
}

void bits_or_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4) {
    const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_or_si256(vd, vs));
  }
  for (; i < dst.size(); ++i) dst[i] |= src[i];
}

bool bits_equal_avx2(std::span<const Word> a, std::span<const Word> b) {
  if (a.size() != b.size()) return false;
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    const __m256i diff = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool bits_intersect_avx2(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t bits_popcount_avx2(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(_mm_popcnt_u64(w));
  return total;
}

constexpr KernelSet kAvx2{
    "avx2",           meet_avx2,           leq_avx2,         descent_mask_avx2,
    pop_eta_avx2,     bits_and_avx2,       bits_or_into_avx2, bits_equal_avx2,
    bits_intersect_avx2, bits_popcount_avx2,
};

}  // namespace

namespace detail {
const KernelSet* avx2_kernel_table() { return &kAvx2; }
}  // namespace detail

}  // namespace tamaripop::kernels
