#include "tamaripop/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tamaripop/hasse.hpp"
#include "tamaripop/pop.hpp"

namespace tamaripop {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation: word is not a bijection on {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = word_.size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("permutation: empty string");
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      const auto field = text.substr(start, comma - start);
      if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("permutation: bad entry \"" + std::string(field) + "\"");
      word.push_back(std::stoi(std::string(field)));
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("permutation: bad character '" + std::string(1, c) + "'");
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

PermStats perm_stats(const Permutation& p) {
  PermStats s;
  const auto& w = p.word();
  const int n = p.size();
  for (int i = 1; i < n; ++i) {
    if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)])
      s.descent_positions.push_back(i);
    else
      s.ascent_positions.push_back(i);
  }
  for (int i = 2; i < n; ++i)
    if (p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)) s.peak_positions.push_back(i);
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    ++run;
    if (i == n || p.at(i) < p.at(i + 1)) {
      s.run_lengths.push_back(run);
      run = 0;
    }
  }
  return s;
}

int ascent_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) c += p.at(i) < p.at(i + 1);
  return c;
}

int descent_count(const Permutation& p) { return p.size() > 0 ? p.size() - 1 - ascent_count(p) : 0; }

std::vector<int> pop_stack_word(std::vector<int> w) {
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i - 1] < w[i]) {
      std::reverse(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(i));
      start = i;
    }
  }
  return w;
}

Permutation pop_stack(const Permutation& p) { return Permutation(pop_stack_word(p.word())); }

std::vector<Permutation> weak_order_covers_down(const Permutation& p) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i + 1 < p.word().size(); ++i) {
    if (p.word()[i] < p.word()[i + 1]) continue;
    std::vector<int> w = p.word();
    std::swap(w[i], w[i + 1]);
    out.emplace_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<int> positions_of(const Permutation& p) {
  std::vector<int> pos(static_cast<std::size_t>(p.size()) + 1);
  for (int i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p.word()[static_cast<std::size_t>(i)])] = i;
  return pos;
}

// Bit for each value pair (u < v) with v before u. Requires n <= 11.
std::uint64_t inversion_mask(const Permutation& p) {
  const auto pos = positions_of(p);
  std::uint64_t mask = 0;
  int bit = 0;
  for (int u = 1; u <= p.size(); ++u)
    for (int v = u + 1; v <= p.size(); ++v, ++bit)
      if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(u)]) mask |= std::uint64_t{1} << bit;
  return mask;
}

bool has_bar_corner(const std::vector<int>& w, std::size_t i) {
  // (w[i], w[i+1]) = (c, a) with some later b, a < b < c.
  if (w[i] < w[i + 1]) return false;
  for (std::size_t j = i + 2; j < w.size(); ++j)
    if (w[i + 1] < w[j] && w[j] < w[i]) return true;
  return false;
}

}  // namespace

bool weak_order_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weak_order_leq: size mismatch");
  const auto pa = positions_of(a);
  const auto pb = positions_of(b);
  for (int u = 1; u <= a.size(); ++u)
    for (int v = u + 1; v <= a.size(); ++v)
      if (pa[static_cast<std::size_t>(v)] < pa[static_cast<std::size_t>(u)] &&
          pb[static_cast<std::size_t>(v)] > pb[static_cast<std::size_t>(u)])
        return false;
  return true;
}

Pattern parse_pattern(std::string_view name) {
  if (name == "312") return Pattern::P312;
  if (name == "231") return Pattern::P231;
  if (name == "31bar2") return Pattern::P31bar2;
  throw std::invalid_argument("unknown pattern \"" + std::string(name) + "\"");
}

bool avoids(const Permutation& p, Pattern pattern) {
  const auto& w = p.word();
  const std::size_t n = w.size();
  switch (pattern) {
    case Pattern::P312:
      // x_j < x_k < x_i with i < j < k; the largest earlier value is the best i.
      for (std::size_t j = 1, best = 0; j + 1 < n; ++j) {
        best = std::max<std::size_t>(best, static_cast<std::size_t>(w[j - 1]));
        for (std::size_t k = j + 1; k < n; ++k)
          if (w[j] < w[k] && static_cast<std::size_t>(w[k]) < best) return false;
      }
      return true;
    case Pattern::P231:
      // x_k < x_i < x_j with i < j < k; take the largest x_i below x_j.
      for (std::size_t j = 1; j + 1 < n; ++j) {
        int best = 0;
        for (std::size_t i = 0; i < j; ++i)
          if (w[i] < w[j]) best = std::max(best, w[i]);
        for (std::size_t k = j + 1; best > 0 && k < n; ++k)
          if (w[k] < best) return false;
      }
      return true;
    case Pattern::P31bar2:
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (has_bar_corner(w, i)) return false;
      return true;
  }
  return true;
}

std::vector<Permutation> enumerate_permutations(int n, EnumOptions opts) {
  if (n < 0) throw std::invalid_argument("enumerate_permutations: negative n");
  check_perm_bound(static_cast<std::size_t>(n), opts, "enumerate_permutations");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> enumerate_av312(int n, EnumOptions opts) {
  auto all = enumerate_permutations(n, opts);
  std::erase_if(all, [](const Permutation& p) { return !avoids(p, Pattern::P312); });
  return all;
}

Permutation pi_down(const Permutation& p) {
  std::vector<int> w = p.word();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (has_bar_corner(w, i)) {
        std::swap(w[i], w[i + 1]);
        changed = true;
        break;
      }
    }
  }
  return Permutation(std::move(w));
}

Permutation pi_down_random(const Permutation& p, std::mt19937_64& rng) {
  std::vector<int> w = p.word();
  std::vector<std::size_t> corners;
  for (;;) {
    corners.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (has_bar_corner(w, i)) corners.push_back(i);
    if (corners.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    const std::size_t i = corners[pick(rng)];
    std::swap(w[i], w[i + 1]);
  }
  return Permutation(std::move(w));
}

Permutation pop_tamari_perm(const Permutation& p) {
  if (!avoids(p, Pattern::P312)) throw std::invalid_argument("pop_tamari_perm: " + p.to_string() + " contains 312");
  return pi_down(pop_stack(p));
}

bool has_image_shape(const Permutation& p) {
  const auto& w = p.word();
  if (w.empty() || w.back() != p.size()) return false;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] > w[i + 1] && w[i + 1] > w[i + 2]) return false;
  return avoids(p, Pattern::P312);
}

std::vector<Permutation> image_by_characterization(int n, EnumOptions opts) {
  auto all = enumerate_permutations(n, opts);
  std::erase_if(all, [](const Permutation& p) { return !has_image_shape(p); });
  return all;
}

Permutation r_map(const Permutation& p) {
  const int m = p.size();
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i - 1)] = m + 1 - p.at(m + 1 - i);
  return Permutation(std::move(w));
}

std::uint64_t count_231_equal_descents_peaks(int n, int k, EnumOptions opts) {
  if (n < 0) throw std::invalid_argument("count_231_equal_descents_peaks: negative n");
  std::uint64_t count = 0;
  for (const auto& p : enumerate_permutations(n + 1, opts)) {
    if (!avoids(p, Pattern::P231)) continue;
    const auto s = perm_stats(p);
    if (static_cast<int>(s.descent_positions.size()) == k && static_cast<int>(s.peak_positions.size()) == k) ++count;
  }
  return count;
}

namespace {

// Entries of the vector for a 312-avoiding word on {1..m}.
void append_tamari_entries(std::span<const int> word, int offset, std::vector<int>& out) {
  const int m = static_cast<int>(word.size());
  if (m == 0) return;
  const auto one = static_cast<std::size_t>(std::find(word.begin(), word.end(), 1) - word.begin());
  const int k = static_cast<int>(one) + 1;
  std::vector<int> left, right;
  for (std::size_t i = 0; i < one; ++i) {
    if (word[i] < 2 || word[i] > k) throw std::invalid_argument("perm_to_tamari_vector: word contains 312");
    left.push_back(word[i] - 1);
  }
  for (std::size_t i = one + 1; i < word.size(); ++i) right.push_back(word[i] - k);

  // First component: (k-1, 0, entries of L shifted up by one), irreducible.
  out.push_back(offset + k - 1);
  out.push_back(offset);
  append_tamari_entries(left, offset + 1, out);
  append_tamari_entries(right, offset + k, out);
}

}  // namespace

BracketVector perm_to_tamari_vector(const Permutation& p) {
  if (p.size() < 1) throw std::invalid_argument("perm_to_tamari_vector: empty permutation");
  if (!avoids(p, Pattern::P312)) throw std::invalid_argument("perm_to_tamari_vector: " + p.to_string() + " contains 312");
  std::vector<int> entries;
  append_tamari_entries(p.word(), 0, entries);
  return BracketVector::from_entries(tamari_context(p.size()), entries);
}

namespace {

FinitePoset av312_poset(const std::vector<Permutation>& perms) {
  std::vector<std::uint64_t> inv;
  inv.reserve(perms.size());
  for (const auto& p : perms) inv.push_back(inversion_mask(p));
  return FinitePoset::from_order(perms.size(), [&](FinitePoset::Index a, FinitePoset::Index b) {
    return (inv[a] & ~inv[b]) == 0;
  });
}

}  // namespace

std::vector<int> av312_up_cover_counts(int n, EnumOptions opts) {
  if (n > 11) throw std::invalid_argument("av312_up_cover_counts: n must be at most 11");
  const auto perms = enumerate_av312(n, opts);
  const auto upper = av312_poset(perms).upper_covers();
  std::vector<int> out;
  for (const auto& u : upper) out.push_back(static_cast<int>(u.size()));
  return out;
}

std::map<Permutation, BracketVector> tamari_perm_bijection(int n, EnumOptions opts) {
  if (n > 11) throw std::invalid_argument("tamari_perm_bijection: n must be at most 11");
  const auto perms = enumerate_av312(n, opts);
  const auto ctx = tamari_context(n);
  const auto paths = enumerate_tam(*ctx, opts);
  if (paths.size() != perms.size())
    throw std::logic_error("tamari_perm_bijection: |Av_n(312)| differs from |Tam_n|");

  std::unordered_map<std::string, FinitePoset::Index> path_index;
  for (FinitePoset::Index i = 0; i < paths.size(); ++i) path_index.emplace(paths[i].to_string(), i);

  std::vector<FinitePoset::Index> image(perms.size());
  std::vector<bool> hit(paths.size(), false);
  std::map<Permutation, BracketVector> out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto vec = perm_to_tamari_vector(perms[i]);
    const auto j = path_index.at(vector_to_path(vec).to_string());
    if (hit[j]) throw std::logic_error("tamari_perm_bijection: construction is not injective at " + perms[i].to_string());
    hit[j] = true;
    image[i] = j;
    out.emplace(perms[i], std::move(vec));
  }

  // Cover relations must correspond exactly.
  const auto weak = av312_poset(perms);
  for (std::size_t x = 0; x < perms.size(); ++x) {
    std::vector<std::string> mapped;
    for (auto y : weak.lower_covers()[x]) mapped.push_back(paths[image[y]].to_string());
    std::vector<std::string> tamari;
    for (const auto& c : covers_down(paths[image[x]], *ctx)) tamari.push_back(c.to_string());
    std::sort(mapped.begin(), mapped.end());
    std::sort(tamari.begin(), tamari.end());
    if (mapped != tamari)
      throw std::logic_error("tamari_perm_bijection: covers below " + perms[x].to_string() + " are not preserved");
  }
  return out;
}

}  // namespace tamaripop
