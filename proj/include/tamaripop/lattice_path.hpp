#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamaripop/bounds.hpp"

namespace tamaripop {

enum class Step : std::uint8_t { N, E };

struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// An immutable N/E lattice path starting at the origin.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  int north_count() const noexcept { return north_; }
  int east_count() const noexcept { return static_cast<int>(steps_.size()) - north_; }

  /// heights()[i] is the number of N steps among the first i steps (size length()+1).
  std::vector<int> heights() const;
  /// Grid points P_0 .. P_length.
  std::vector<GridPoint> points() const;
  GridPoint endpoint() const noexcept { return {east_count(), north_}; }

  std::string to_string() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
  int north_ = 0;
};

/// Parses an uppercase N/E string. Throws std::invalid_argument on an empty
/// string or any other character.
LatticePath parse_path(std::string_view text);

/// (NE)^n, the ambient path of the classical Tamari lattice.
LatticePath dyck_nu(int n);
/// E(NE)^{n-1}; Tam of this path is isomorphic to Tam_n.
LatticePath shifted_dyck_nu(int n);

/// A fixed ambient path ν with its precomputed tables.
class NuContext {
 public:
  /// Throws std::invalid_argument if ν is empty or longer than
  /// kMaxRepresentableEll.
  static std::shared_ptr<const NuContext> make(LatticePath nu);
  static std::shared_ptr<const NuContext> make(std::string_view nu_text) { return make(parse_path(nu_text)); }

  const LatticePath& nu() const noexcept { return nu_; }
  std::size_t ell() const noexcept { return nu_.length(); }
  /// Endpoint height of ν.
  int top() const noexcept { return nu_.north_count(); }
  int width() const noexcept { return nu_.east_count(); }

  /// b_i(ν), i = 0..ell.
  const std::vector<int>& heights() const noexcept { return heights_; }
  /// f_k = largest i with b_i(ν) = k, k = 0..top.
  const std::vector<int>& fixed_positions() const noexcept { return fixed_; }
  int fixed_position(int k) const { return fixed_.at(static_cast<std::size_t>(k)); }

  /// heights() and fixed_positions() as int8 lanes for the vector kernels.
  std::span<const std::int8_t> height_lanes() const noexcept { return height_lanes_; }
  std::span<const std::int8_t> fixed_lanes() const noexcept { return fixed_lanes_; }

  /// Rightmost x-coordinate of ν at height y.
  int rightmost_x(int y) const { return fixed_position(y) - y; }

  /// Same lattice: ν paths are equal.
  bool same_lattice(const NuContext& other) const noexcept { return this == &other || nu_ == other.nu_; }

 private:
  explicit NuContext(LatticePath nu);

  LatticePath nu_;
  std::vector<int> heights_;
  std::vector<int> fixed_;
  std::vector<int> east_floor_;  // height of ν's k-th E step
  std::vector<std::int8_t> height_lanes_;
  std::vector<std::int8_t> fixed_lanes_;
  friend bool lies_weakly_above(const LatticePath&, const NuContext&);
};

using NuContextPtr = std::shared_ptr<const NuContext>;

/// East steps available from `point` before passing strictly right of ν.
/// Throws std::domain_error if the point is already strictly right of ν or
/// its height is outside [0, top].
int horizontal_distance(const NuContext& ctx, GridPoint point);

/// Throws std::invalid_argument if the endpoints differ.
bool lies_weakly_above(const LatticePath& mu, const NuContext& ctx);

/// Every path weakly above ν with ν's endpoints, lexicographic with N < E.
std::vector<LatticePath> enumerate_tam(const NuContext& ctx, EnumOptions opts = {});

/// Paths covering mu in Tam(ν), one per EN factor of mu.
std::vector<LatticePath> covers_up(const LatticePath& mu, const NuContext& ctx);

/// Paths covered by mu in Tam(ν).
std::vector<LatticePath> covers_down(const LatticePath& mu, const NuContext& ctx);

/// The maximum of Tam(ν): all N steps first, then all E steps.
LatticePath top_path(const NuContext& ctx);

}  // namespace tamaripop
