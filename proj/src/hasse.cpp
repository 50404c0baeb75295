#include "tamaripop/hasse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tamaripop {

using kernels::Word;

FinitePoset FinitePoset::from_lower_covers(std::vector<std::vector<Index>> lower_covers) {
  FinitePoset p;
  const std::size_t n = lower_covers.size();
  p.lower_ = std::move(lower_covers);

  // Kahn's algorithm on y -> x edges.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<Index>> upper(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y : p.lower_[x]) {
      if (y >= n) throw std::invalid_argument("FinitePoset: cover index out of range");
      upper[y].push_back(x);
      ++pending[x];
    }
  }
  std::vector<Index> ready;
  for (Index x = 0; x < n; ++x)
    if (pending[x] == 0) ready.push_back(x);
  std::reverse(ready.begin(), ready.end());
  while (!ready.empty()) {
    const Index y = ready.back();
    ready.pop_back();
    p.by_pos_.push_back(y);
    for (Index x : upper[y])
      if (--pending[x] == 0) ready.push_back(x);
  }
  if (p.by_pos_.size() != n) throw std::invalid_argument("FinitePoset: cover relation has a cycle");
  p.build_down_sets();
  return p;
}

void FinitePoset::build_down_sets() {
  const std::size_t n = by_pos_.size();
  pos_.assign(n, 0);
  for (Index i = 0; i < n; ++i) pos_[by_pos_[i]] = i;
  words_ = (n + 63) / 64;
  down_.assign(n * words_, 0);
  const auto& k = kernels::active_kernels();
  for (Index x : by_pos_) {
    std::span<Word> row(down_.data() + static_cast<std::size_t>(x) * words_, words_);
    row[pos_[x] / 64] |= Word{1} << (pos_[x] % 64);
    for (Index y : lower_[x]) k.bits_or_into(row, down(y));
  }
}

FinitePoset FinitePoset::from_order(std::size_t size, const std::function<bool(Index, Index)>& leq) {
  FinitePoset p;
  const auto n = static_cast<Index>(size);

  // b < a implies a strictly larger down-set, so sorting by down-set size
  // gives a linear extension.
  std::vector<std::size_t> below(n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (leq(b, a)) ++below[a];
  p.by_pos_.resize(n);
  std::iota(p.by_pos_.begin(), p.by_pos_.end(), Index{0});
  std::stable_sort(p.by_pos_.begin(), p.by_pos_.end(), [&](Index a, Index b) { return below[a] < below[b]; });
  p.pos_.assign(n, 0);
  for (Index i = 0; i < n; ++i) p.pos_[p.by_pos_[i]] = i;

  p.words_ = (size + 63) / 64;
  p.down_.assign(size * p.words_, 0);
  std::vector<Word> up(size * p.words_, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!leq(b, a)) continue;
      p.down_[a * p.words_ + p.pos_[b] / 64] |= Word{1} << (p.pos_[b] % 64);
      up[b * p.words_ + p.pos_[a] / 64] |= Word{1} << (p.pos_[a] % 64);
    }
  }

  // y ⋖ x iff the interval [y, x] is exactly {y, x}.
  const auto& k = kernels::active_kernels();
  std::vector<Word> scratch(p.words_);
  p.lower_.assign(n, {});
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (y == x || !p.down_has(x, p.pos_[y])) continue;
      k.bits_and(p.down(x), std::span<const Word>(up.data() + static_cast<std::size_t>(y) * p.words_, p.words_), scratch);
      if (k.bits_popcount(scratch) == 2) p.lower_[x].push_back(y);
    }
  }
  return p;
}

bool FinitePoset::leq(Index a, Index b) const { return down_has(b, pos_.at(a)); }

std::optional<FinitePoset::Index> FinitePoset::meet(Index a, Index b) const {
  std::vector<Word> scratch(words_);
  return meet(a, b, scratch);
}

std::optional<FinitePoset::Index> FinitePoset::meet(Index a, Index b, std::vector<Word>& scratch) const {
  scratch.resize(words_);
  const auto& k = kernels::active_kernels();
  k.bits_and(down(a), down(b), scratch);
  // The glb, if any, is the last common lower bound in the linear extension.
  for (std::size_t w = words_; w-- > 0;) {
    if (scratch[w] == 0) continue;
    const auto pos = static_cast<Index>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(scratch[w])));
    const Index g = by_pos_[pos];
    if (k.bits_equal(down(g), scratch)) return g;
    return std::nullopt;
  }
  return std::nullopt;
}

std::size_t FinitePoset::down_set_size(Index a) const { return kernels::active_kernels().bits_popcount(down(a)); }

std::vector<std::vector<FinitePoset::Index>> FinitePoset::upper_covers() const {
  std::vector<std::vector<Index>> upper(lower_.size());
  for (Index x = 0; x < lower_.size(); ++x)
    for (Index y : lower_[x]) upper[y].push_back(x);
  return upper;
}

}  // namespace tamaripop
