#include "tamaripop/pop.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop {

NuContextPtr tamari_context(int n) {
  if (n < 1) throw std::invalid_argument("tamari_context: n must be positive");
  static std::mutex mutex;
  static std::vector<NuContextPtr> cache;
  std::lock_guard lock(mutex);
  const auto idx = static_cast<std::size_t>(n);
  if (cache.size() <= idx) cache.resize(idx + 1);
  if (!cache[idx]) cache[idx] = NuContext::make(shifted_dyck_nu(n));
  return cache[idx];
}

std::vector<std::size_t> delta_set(const BracketVector& vec) {
  std::uint64_t mask = kernels::active_kernels().descent_mask(vec.entries());
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

int eta(const BracketVector& vec, std::size_t i) {
  if (i >= vec.size()) throw std::out_of_range("eta: index past the end");
  const NuContext& ctx = vec.context();
  if (i + 1 == vec.size() || vec[i] <= vec[i + 1]) return vec[i];
  for (int x = vec[i] - 1; x >= ctx.heights()[i]; --x) {
    const auto last = static_cast<std::size_t>(ctx.fixed_position(x));
    bool ok = true;
    for (std::size_t j = i + 1; j <= last && ok; ++j) ok = vec[j] <= x;
    if (ok) return x;
  }
  throw std::logic_error("eta: no admissible value at index " + std::to_string(i) + " of " + vec.to_string());
}

BracketVector pop_vector(const BracketVector& vec) {
  const NuContext& ctx = vec.context();
  std::vector<BracketVector::Entry> out(vec.size());
  if (!kernels::active_kernels().pop_eta(vec.entries(), ctx.height_lanes(), ctx.fixed_lanes(), out))
    throw std::logic_error("pop_vector: descent without admissible value in " + vec.to_string());
  return BracketVector::trusted(vec.context_ptr(), std::move(out));
}

LatticePath pop_generic(const LatticePath& mu, const NuContextPtr& ctx) {
  BracketVector acc = path_to_vector(mu, ctx);
  for (const LatticePath& lower : covers_down(mu, *ctx)) acc = meet(acc, path_to_vector(lower, ctx));
  return vector_to_path(acc);
}

std::vector<BracketVector> down_cover_candidates(const BracketVector& vec) {
  std::vector<BracketVector> out;
  for (std::size_t i : delta_set(vec)) {
    std::vector<BracketVector::Entry> entries(vec.entries().begin(), vec.entries().end());
    entries[i] = static_cast<BracketVector::Entry>(eta(vec, i));
    out.push_back(BracketVector::trusted(vec.context_ptr(), std::move(entries)));
  }
  return out;
}

namespace {

// Pop strictly lowers a non-minimal vector, so the entry sum above the
// minimum bounds the trajectory length.
int pop_step_cap(const BracketVector& vec) {
  int cap = 0;
  const auto& floor = vec.context().heights();
  for (std::size_t i = 0; i < vec.size(); ++i) cap += vec[i] - floor[i];
  return cap;
}

}  // namespace

PopTrajectory pop_trajectory(const BracketVector& vec) {
  PopTrajectory traj;
  traj.states.push_back(vec);
  const int cap = pop_step_cap(vec);
  while (!traj.states.back().is_minimum()) {
    if (traj.sortability_time >= cap) throw std::logic_error("pop_trajectory: Pop failed to descend from " + vec.to_string());
    traj.states.push_back(pop_vector(traj.states.back()));
    ++traj.sortability_time;
  }
  return traj;
}

int sortability_time(const BracketVector& vec) {
  const int cap = pop_step_cap(vec);
  int t = 0;
  BracketVector cur = vec;
  while (!cur.is_minimum()) {
    if (t >= cap) throw std::logic_error("sortability_time: Pop failed to descend from " + vec.to_string());
    cur = pop_vector(cur);
    ++t;
  }
  return t;
}

std::uint64_t SortabilityCensus::sortable_within(int t) const {
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < counts.size() && static_cast<int>(s) <= t; ++s) total += counts[s];
  return total;
}

std::uint64_t SortabilityCensus::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

SortabilityCensus sortability_census(int n, EnumOptions opts) {
  if (n < 1) throw std::invalid_argument("sortability_census: n must be positive");
  const auto ctx = tamari_context(n);
  const auto all = enumerate_vectors(ctx, opts);

  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(all.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) index.emplace(all[i].key(), i);

  // Memoized trajectories: time[i] = 1 + time[pop(i)].
  constexpr int kUnknown = -1;
  std::vector<int> time(all.size(), kUnknown);
  std::vector<std::uint32_t> pending;
  for (std::uint32_t start = 0; start < all.size(); ++start) {
    std::uint32_t cur = start;
    while (time[cur] == kUnknown) {
      if (all[cur].is_minimum()) {
        time[cur] = 0;
        break;
      }
      pending.push_back(cur);
      cur = index.at(pop_vector(all[cur]).key());
      if (pending.size() > all.size()) throw std::logic_error("sortability_census: Pop trajectory cycles");
    }
    int t = time[cur];
    while (!pending.empty()) {
      time[pending.back()] = ++t;
      pending.pop_back();
    }
  }

  SortabilityCensus census;
  census.n = n;
  for (int t : time) {
    if (census.counts.size() <= static_cast<std::size_t>(t)) census.counts.resize(static_cast<std::size_t>(t) + 1, 0);
    ++census.counts[static_cast<std::size_t>(t)];
  }
  return census;
}

std::uint64_t count_t_sortable(int n, int t, EnumOptions opts) {
  if (t < 0) throw std::invalid_argument("count_t_sortable: t must be nonnegative");
  return sortability_census(n, opts).sortable_within(t);
}

namespace {

int tamari_size_of(const NuContext& ctx) {
  const int n = ctx.top() + 1;
  if (!(ctx.nu() == shifted_dyck_nu(n)))
    throw std::invalid_argument("expected a vector of Vec(E(NE)^{k-1}), got ν = " + ctx.nu().to_string());
  return n;
}

}  // namespace

bool is_irreducible(const BracketVector& vec) { return vec[0] == vec[vec.size() - 1]; }

std::vector<BracketVector> decompose_irreducible(const BracketVector& vec) {
  tamari_size_of(vec.context());
  std::vector<BracketVector> parts;
  std::size_t pos = 0;
  int offset = 0;
  while (pos < vec.size()) {
    // The component runs from pos through f_{b_0} = 2 b_0 + 1 (relative).
    const int m = vec[pos] - offset + 1;
    const auto len = static_cast<std::size_t>(2 * m);
    std::vector<int> entries(len);
    for (std::size_t j = 0; j < len; ++j) entries[j] = vec[pos + j] - offset;
    parts.push_back(BracketVector::from_entries(tamari_context(m), entries));
    pos += len;
    offset += m;
  }
  return parts;
}

BracketVector sum_irreducible(const std::vector<BracketVector>& components) {
  if (components.empty()) throw std::invalid_argument("sum_irreducible: no components");
  std::vector<int> entries;
  int offset = 0;
  for (const auto& c : components) {
    const int m = tamari_size_of(c.context());
    if (!is_irreducible(c)) throw std::invalid_argument("sum_irreducible: component " + c.to_string() + " is reducible");
    for (std::size_t j = 0; j < c.size(); ++j) entries.push_back(c[j] + offset);
    offset += m;
  }
  return BracketVector::from_entries(tamari_context(offset), entries);
}

BracketVector hash_map(const BracketVector& vec) {
  const NuContext& ctx = vec.context();
  if (ctx.top() == 0) throw std::invalid_argument("hash_map: ν = " + ctx.nu().to_string() + " has no N step");
  const auto drop = static_cast<std::size_t>(ctx.fixed_position(0)) + 1;
  const auto& steps = ctx.nu().steps();
  if (drop >= steps.size()) throw std::invalid_argument("hash_map: nothing left of ν = " + ctx.nu().to_string());
  auto sharp = NuContext::make(LatticePath(std::vector<Step>(steps.begin() + static_cast<std::ptrdiff_t>(drop), steps.end())));
  std::vector<int> entries;
  for (std::size_t j = drop; j < vec.size(); ++j) entries.push_back(vec[j] - 1);
  return BracketVector::from_entries(std::move(sharp), entries);
}

std::vector<BracketVector> pop_image(int n, EnumOptions opts) {
  const auto all = enumerate_vectors(tamari_context(n), opts);
  std::vector<BracketVector> image;
  image.reserve(all.size());
  for (const auto& v : all) image.push_back(pop_vector(v));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

int up_cover_count(const BracketVector& vec) {
  return static_cast<int>(covers_up(vector_to_path(vec), vec.context()).size());
}

std::uint64_t PopPolynomial::image_size() const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : coeffs) total += c;
  return total;
}

PopPolynomial pop_polynomial(int n, EnumOptions opts) {
  PopPolynomial poly;
  for (const auto& b : pop_image(n, opts)) ++poly.coeffs[up_cover_count(b)];
  return poly;
}

}  // namespace tamaripop
