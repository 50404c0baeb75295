#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tamaripop/lattice_path.hpp"

namespace tamaripop {

/// An element of Vec(ν): entries b_0 .. b_ell tied to the context they were
/// validated against. Only constructible through validating factories.
class BracketVector {
 public:
  using Entry = std::int8_t;

  /// Validates `entries` against ctx; throws std::invalid_argument on a
  /// length mismatch or if the entries are not a ν-bracket vector.
  static BracketVector from_entries(NuContextPtr ctx, std::span<const int> entries);

  /// b(ν), the minimum of Vec(ν).
  static BracketVector minimum(NuContextPtr ctx);

  const NuContext& context() const noexcept { return *ctx_; }
  const NuContextPtr& context_ptr() const noexcept { return ctx_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::vector<int> to_ints() const { return {entries_.begin(), entries_.end()}; }

  bool is_minimum() const;
  std::string to_string() const;  // "(1,0,1,3)"
  /// Raw entry bytes; a hash key within one context.
  std::string key() const { return {reinterpret_cast<const char*>(entries_.data()), entries_.size()}; }

  friend bool operator==(const BracketVector& a, const BracketVector& b) {
    return a.ctx_->same_lattice(*b.ctx_) && a.entries_ == b.entries_;
  }
  /// Lexicographic on entries; only meaningful within one context.
  friend bool operator<(const BracketVector& a, const BracketVector& b) { return a.entries_ < b.entries_; }

  /// Bypasses validation; callers must guarantee the invariants.
  static BracketVector trusted(NuContextPtr ctx, std::vector<Entry> entries) {
    return BracketVector(std::move(ctx), std::move(entries));
  }

 private:
  BracketVector(NuContextPtr ctx, std::vector<Entry> entries) : ctx_(std::move(ctx)), entries_(std::move(entries)) {}

  NuContextPtr ctx_;
  std::vector<Entry> entries_;
};

/// Fixed-entry, bound and 121-avoidance conditions. Throws
/// std::invalid_argument if vec.size() != ell + 1.
bool is_valid(std::span<const int> vec, const NuContext& ctx);

/// The associated vector: each new grid point of height k writes k into the
/// rightmost empty slot at or left of f_k. Throws std::invalid_argument if mu
/// is not in Tam(ν).
BracketVector path_to_vector(const LatticePath& mu, NuContextPtr ctx);

/// Inverse of path_to_vector by replaying the slot filling.
LatticePath vector_to_path(const BracketVector& vec);

/// Entrywise minimum. Throws std::invalid_argument on a context mismatch.
BracketVector meet(const BracketVector& a, const BracketVector& b);

/// Componentwise order. Throws std::invalid_argument on a context mismatch.
bool leq(const BracketVector& a, const BracketVector& b);

/// All of Vec(ν) in lexicographic order.
std::vector<BracketVector> enumerate_vectors(NuContextPtr ctx, EnumOptions opts = {});

}  // namespace tamaripop
