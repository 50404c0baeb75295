#include <algorithm>
#include <bit>
#include <cassert>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop::kernels {
namespace {

void meet_scalar(std::span<const Lane> a, std::span<const Lane> b, std::span<Lane> out) {
  assert(a.size() == b.size() && b.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
}

bool leq_scalar(std::span<const Lane> a, std::span<const Lane> b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Word descent_mask_scalar(std::span<const Lane> v) {
  assert(v.size() <= 64);
  Word mask = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) mask |= Word{1} << i;
  return mask;
}

bool pop_eta_scalar(std::span<const Lane> v, std::span<const Lane> floor, std::span<const Lane> fixed,
                    std::span<Lane> out) {
  const std::size_t len = v.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (i + 1 == len || v[i] <= v[i + 1]) {
      out[i] = v[i];
      continue;
    }
    bool found = false;
    for (int x = v[i] - 1; x >= floor[i]; --x) {
      const auto last = static_cast<std::size_t>(fixed[static_cast<std::size_t>(x)]);
      bool ok = true;
      for (std::size_t j = i + 1; j <= last; ++j) {
        if (v[j] > x) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out[i] = static_cast<Lane>(x);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

void bits_and_scalar(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
}

void bits_or_into_scalar(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

bool bits_equal_scalar(std::span<const Word> a, std::span<const Word> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool bits_intersect_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t bits_popcount_scalar(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

constexpr KernelSet kScalar{
    "scalar",          meet_scalar,           leq_scalar,        descent_mask_scalar,
    pop_eta_scalar,    bits_and_scalar,       bits_or_into_scalar, bits_equal_scalar,
    bits_intersect_scalar, bits_popcount_scalar,
};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace tamaripop::kernels
