#pragma once

// Pop dynamics on ν-Tamari lattices.
//
// pop_vector is the production operator: it works on bracket vectors and
// never enumerates covers. pop_generic computes the meet of an element and
// its lower covers straight from the path-level cover relation; it exists as
// the oracle the vector formula is checked against.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tamaripop/bracket_vector.hpp"

namespace tamaripop {

/// Vec(E(NE)^{n-1}), the bracket-vector model of Tam_n. Contexts are shared
/// per n.
NuContextPtr tamari_context(int n);

/// Indices i < ell with b_i > b_{i+1}.
std::vector<std::size_t> delta_set(const BracketVector& vec);

/// Entry i of Pop(vec), computed from its definition. Throws std::out_of_range
/// for i > ell and std::logic_error if a descent has no admissible value.
int eta(const BracketVector& vec, std::size_t i);

BracketVector pop_vector(const BracketVector& vec);

/// Meet of mu and all of its lower covers, via path covers and termwise min.
LatticePath pop_generic(const LatticePath& mu, const NuContextPtr& ctx);

/// vec with a single descent entry i replaced by eta(vec, i), one per descent.
std::vector<BracketVector> down_cover_candidates(const BracketVector& vec);

struct PopTrajectory {
  std::vector<BracketVector> states;  // vec, Pop(vec), ..., minimum
  int sortability_time = 0;
};

PopTrajectory pop_trajectory(const BracketVector& vec);

/// Least t with Pop^t(vec) minimal.
int sortability_time(const BracketVector& vec);

/// sortability-time histogram over all of Tam_n: counts[t] elements need
/// exactly t applications of Pop.
struct SortabilityCensus {
  int n = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t sortable_within(int t) const;
  std::uint64_t total() const;
};

SortabilityCensus sortability_census(int n, EnumOptions opts = {});

/// h_t(n): elements of Tam_n that reach the minimum within t steps.
std::uint64_t count_t_sortable(int n, int t, EnumOptions opts = {});

/// A vector of Vec(E(NE)^{n-1}) is irreducible when b_0 == b_ell.
bool is_irreducible(const BracketVector& vec);

/// Splits vec into irreducible components, each expressed in its own
/// Vec(E(NE)^{m-1}) with the running offset removed. Throws
/// std::invalid_argument unless vec lives in some Vec(E(NE)^{k-1}).
std::vector<BracketVector> decompose_irreducible(const BracketVector& vec);

/// Inverse of decompose_irreducible: concatenation with height offsets.
BracketVector sum_irreducible(const std::vector<BracketVector>& components);

/// Drops the first f_0 + 1 entries and subtracts one; the result lives in
/// Vec(ν#), ν# being ν without its first f_0 + 1 steps. Throws
/// std::invalid_argument if ν has no N step or ν# would be empty.
BracketVector hash_map(const BracketVector& vec);

/// Pop(Tam_n) as a sorted, deduplicated list of vectors.
std::vector<BracketVector> pop_image(int n, EnumOptions opts = {});

/// Number of elements covering vec, counted on the path side.
int up_cover_count(const BracketVector& vec);

/// Histogram of up-cover counts over the Pop image.
struct PopPolynomial {
  std::map<int, std::uint64_t> coeffs;
  std::uint64_t image_size() const;
  friend bool operator==(const PopPolynomial&, const PopPolynomial&) = default;
};

PopPolynomial pop_polynomial(int n, EnumOptions opts = {});

}  // namespace tamaripop
