#pragma once

// Finite posets as bitset down-sets. Used as the independent oracle for
// order, cover and meet questions: nothing here knows about bracket vectors.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop {

class FinitePoset {
 public:
  using Index = std::uint32_t;

  /// lower_covers[x] lists every y with y ⋖ x. The order is the reflexive
  /// transitive closure. Throws std::invalid_argument on a cycle or an
  /// out-of-range index.
  static FinitePoset from_lower_covers(std::vector<std::vector<Index>> lower_covers);

  /// Builds the poset of a partial-order predicate leq(a, b) meaning a <= b,
  /// and derives its cover relation.
  static FinitePoset from_order(std::size_t size, const std::function<bool(Index, Index)>& leq);

  std::size_t size() const noexcept { return by_pos_.size(); }

  bool leq(Index a, Index b) const;

  /// Greatest lower bound, or nullopt when a and b have none.
  std::optional<Index> meet(Index a, Index b) const;
  /// Same, reusing `scratch` to avoid an allocation per call.
  std::optional<Index> meet(Index a, Index b, std::vector<kernels::Word>& scratch) const;

  std::size_t down_set_size(Index a) const;

  const std::vector<std::vector<Index>>& lower_covers() const noexcept { return lower_; }
  std::vector<std::vector<Index>> upper_covers() const;

  /// Elements in a linear extension (every element after all elements below it).
  const std::vector<Index>& linear_extension() const noexcept { return by_pos_; }

 private:
  FinitePoset() = default;
  void build_down_sets();
  std::span<const kernels::Word> down(Index a) const {
    return {down_.data() + static_cast<std::size_t>(a) * words_, words_};
  }
  bool down_has(Index a, Index pos) const { return (down_[a * words_ + pos / 64] >> (pos % 64)) & 1U; }

  std::vector<std::vector<Index>> lower_;
  std::vector<Index> by_pos_;  // linear extension
  std::vector<Index> pos_;     // element -> position in by_pos_
  std::size_t words_ = 0;
  std::vector<kernels::Word> down_;  // row a: bits at positions of elements <= a
};

}  // namespace tamaripop
