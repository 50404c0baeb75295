#include "tamaripop/bracket_vector.hpp"

#include <stdexcept>

#include "tamaripop/kernels/kernels.hpp"

namespace tamaripop {
namespace {

void require_same_context(const BracketVector& a, const BracketVector& b, const char* what) {
  if (!a.context().same_lattice(b.context()))
    throw std::invalid_argument(std::string(what) + ": vectors belong to different lattices (" +
                                a.context().nu().to_string() + " vs " + b.context().nu().to_string() + ")");
}

// Rightmost unfilled slot at or left of `limit`, or -1.
int rightmost_empty(const std::vector<bool>& filled, int limit) {
  for (int s = limit; s >= 0; --s)
    if (!filled[static_cast<std::size_t>(s)]) return s;
  return -1;
}

}  // namespace

bool is_valid(std::span<const int> vec, const NuContext& ctx) {
  if (vec.size() != ctx.ell() + 1)
    throw std::invalid_argument("is_valid: expected " + std::to_string(ctx.ell() + 1) + " entries, got " +
                                std::to_string(vec.size()));
  const auto& floor = ctx.heights();
  const int top = ctx.top();
  for (int k = 0; k <= top; ++k)
    if (vec[static_cast<std::size_t>(ctx.fixed_position(k))] != k) return false;
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec[i] < floor[i] || vec[i] > top) return false;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    const int k = vec[i];
    const auto last = static_cast<std::size_t>(ctx.fixed_position(k));
    for (std::size_t j = i + 1; j <= last; ++j)
      if (vec[j] > k) return false;
  }
  return true;
}

BracketVector BracketVector::from_entries(NuContextPtr ctx, std::span<const int> entries) {
  if (!is_valid(entries, *ctx))
    throw std::invalid_argument("not a bracket vector for ν = " + ctx->nu().to_string());
  return BracketVector(std::move(ctx), std::vector<Entry>(entries.begin(), entries.end()));
}

BracketVector BracketVector::minimum(NuContextPtr ctx) {
  const auto& h = ctx->heights();
  std::vector<Entry> entries(h.begin(), h.end());
  return BracketVector(std::move(ctx), std::move(entries));
}

bool BracketVector::is_minimum() const {
  const auto& h = ctx_->heights();
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != h[i]) return false;
  return true;
}

std::string BracketVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

BracketVector path_to_vector(const LatticePath& mu, NuContextPtr ctx) {
  if (!lies_weakly_above(mu, *ctx))
    throw std::invalid_argument("path_to_vector: " + mu.to_string() + " is not weakly above " + ctx->nu().to_string());
  const std::size_t slots = ctx->ell() + 1;
  std::vector<bool> filled(slots, false);
  std::vector<BracketVector::Entry> out(slots, 0);
  auto write = [&](int k) {
    const int s = rightmost_empty(filled, ctx->fixed_position(k));
    if (s < 0) throw std::logic_error("path_to_vector: no free slot for height " + std::to_string(k));
    filled[static_cast<std::size_t>(s)] = true;
    out[static_cast<std::size_t>(s)] = static_cast<BracketVector::Entry>(k);
  };
  int k = 0;
  write(k);
  for (Step step : mu.steps()) {
    if (step == Step::N) ++k;
    write(k);
  }
  return BracketVector::trusted(std::move(ctx), std::move(out));
}

LatticePath vector_to_path(const BracketVector& vec) {
  const NuContext& ctx = vec.context();
  std::vector<bool> filled(vec.size(), false);
  std::vector<Step> steps;
  steps.reserve(ctx.ell());
  int k = 0;
  int east = 0;
  auto take = [&](int height) {
    const int s = rightmost_empty(filled, ctx.fixed_position(height));
    if (s < 0 || vec[static_cast<std::size_t>(s)] != height)
      throw std::logic_error("vector_to_path: inconsistent vector " + vec.to_string());
    filled[static_cast<std::size_t>(s)] = true;
  };
  take(0);
  while (steps.size() < ctx.ell()) {
    // An E step writes k again; it is forced exactly when the slot it would
    // fill expects k, since later points only carry larger heights.
    const int s = rightmost_empty(filled, ctx.fixed_position(k));
    if (s >= 0 && vec[static_cast<std::size_t>(s)] == k && east < ctx.width()) {
      steps.push_back(Step::E);
      ++east;
    } else {
      if (k == ctx.top()) throw std::logic_error("vector_to_path: inconsistent vector " + vec.to_string());
      steps.push_back(Step::N);
      ++k;
    }
    take(k);
  }
  return LatticePath(std::move(steps));
}

BracketVector meet(const BracketVector& a, const BracketVector& b) {
  require_same_context(a, b, "meet");
  std::vector<BracketVector::Entry> out(a.size());
  kernels::active_kernels().meet(a.entries(), b.entries(), out);
  return BracketVector::trusted(a.context_ptr(), std::move(out));
}

bool leq(const BracketVector& a, const BracketVector& b) {
  require_same_context(a, b, "leq");
  return kernels::active_kernels().leq(a.entries(), b.entries());
}

namespace {

struct VectorEnumerator {
  const NuContextPtr& ctx;
  std::vector<int> fixed_value;  // k if index is f_k, else -1
  std::vector<BracketVector::Entry> prefix;
  std::vector<BracketVector>& out;

  // Condition (3) from earlier entries: v_j <= v_i whenever i < j <= f_{v_i}.
  int upper_bound(std::size_t j) const {
    int ub = ctx->top();
    for (std::size_t i = 0; i < j; ++i) {
      const int k = prefix[i];
      if (static_cast<std::size_t>(ctx->fixed_position(k)) >= j && k < ub) ub = k;
    }
    return ub;
  }

  void run(std::size_t j) {
    if (j == prefix.size()) {
      out.push_back(BracketVector::trusted(ctx, prefix));
      return;
    }
    const int ub = upper_bound(j);
    int lo = ctx->heights()[j];
    int hi = ub;
    if (fixed_value[j] >= 0) {
      if (fixed_value[j] > ub) return;
      lo = hi = fixed_value[j];
    }
    for (int v = lo; v <= hi; ++v) {
      prefix[j] = static_cast<BracketVector::Entry>(v);
      run(j + 1);
    }
  }
};

}  // namespace

std::vector<BracketVector> enumerate_vectors(NuContextPtr ctx, EnumOptions opts) {
  check_ell_bound(ctx->ell(), opts, "enumerate_vectors");
  std::vector<int> fixed_value(ctx->ell() + 1, -1);
  for (int k = 0; k <= ctx->top(); ++k) fixed_value[static_cast<std::size_t>(ctx->fixed_position(k))] = k;
  std::vector<BracketVector> out;
  VectorEnumerator gen{ctx, std::move(fixed_value), std::vector<BracketVector::Entry>(ctx->ell() + 1, 0), out};
  gen.run(0);
  return out;
}

}  // namespace tamaripop
