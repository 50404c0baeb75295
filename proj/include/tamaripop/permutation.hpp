#pragma once

// The permutation side: pop-stack sorting on the right weak order, the
// sylvester congruence, and the 312-avoiding model of the Tamari lattice.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tamaripop/bounds.hpp"
#include "tamaripop/bracket_vector.hpp"

namespace tamaripop {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  static Permutation reversal(int n);

  const std::vector<int>& word() const noexcept { return word_; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  /// 1-based access, matching x_1 .. x_n.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

  /// "74513" for n <= 9, "1,2,...,10" otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

Permutation parse_permutation(std::string_view text);

/// Positions are 1-based. Peaks are interior positions 2..n-1.
struct PermStats {
  std::vector<int> descent_positions;
  std::vector<int> ascent_positions;
  std::vector<int> peak_positions;
  std::vector<int> run_lengths;  // descending runs, left to right
};

PermStats perm_stats(const Permutation& p);

int ascent_count(const Permutation& p);
int descent_count(const Permutation& p);

/// Reverses every maximal descending run.
Permutation pop_stack(const Permutation& p);
/// Reverses the maximal descending runs of any word of distinct integers.
std::vector<int> pop_stack_word(std::vector<int> w);

/// One permutation per descent of p, with that adjacent pair swapped.
std::vector<Permutation> weak_order_covers_down(const Permutation& p);

/// Right weak order: inversion-set containment.
bool weak_order_leq(const Permutation& a, const Permutation& b);

enum class Pattern { P312, P231, P31bar2 };

/// Accepts "312", "231" and "31bar2"; throws std::invalid_argument otherwise.
Pattern parse_pattern(std::string_view name);

bool avoids(const Permutation& p, Pattern pattern);

/// S_n in lexicographic order.
std::vector<Permutation> enumerate_permutations(int n, EnumOptions opts = {});

/// Av_n(312) in lexicographic order.
std::vector<Permutation> enumerate_av312(int n, EnumOptions opts = {});

/// Minimum of the sylvester class of p: applies the leftmost available
/// "ca -> ac" swap (a < b < c with b later) until none remains.
Permutation pi_down(const Permutation& p);

/// Same closure, picking each swap uniformly among the available ones.
Permutation pi_down_random(const Permutation& p, std::mt19937_64& rng);

/// Pop on Av_n(312): pi_down(pop_stack(p)). Throws std::invalid_argument if p
/// contains 312.
Permutation pop_tamari_perm(const Permutation& p);

/// p_n = n, no x_i > x_{i+1} > x_{i+2}, and 312-avoiding.
bool has_image_shape(const Permutation& p);
std::vector<Permutation> image_by_characterization(int n, EnumOptions opts = {});

/// Reverse-complement: p'_i = m + 1 - p_{m+1-i}.
Permutation r_map(const Permutation& p);

/// 231-avoiding elements of S_{n+1} with k descents and k peaks, by brute force.
std::uint64_t count_231_equal_descents_peaks(int n, int k, EnumOptions opts = {});

/// The order isomorphism Av_n(312) -> Vec(E(NE)^{n-1}) on one element:
/// splits p = L 1 R and maps L to the hash preimage of the first irreducible
/// component and R to the remainder. Throws std::invalid_argument if p
/// contains 312.
BracketVector perm_to_tamari_vector(const Permutation& p);

/// perm_to_tamari_vector on all of Av_n(312), after checking that it sends
/// the weak-order cover relation of Av_n(312) exactly onto Tamari covers.
/// Throws std::logic_error if that check fails.
std::map<Permutation, BracketVector> tamari_perm_bijection(int n, EnumOptions opts = {});

/// Number of elements of Av_n(312) covering each element, in the induced
/// weak order, keyed like enumerate_av312(n).
std::vector<int> av312_up_cover_counts(int n, EnumOptions opts = {});

}  // namespace tamaripop
