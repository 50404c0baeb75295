#include "tamaripop/lattice_path.hpp"

#include <stdexcept>

namespace tamaripop {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (Step s : steps_)
    if (s == Step::N) ++north_;
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + (steps_[i] == Step::N ? 1 : 0);
  return h;
}

std::vector<GridPoint> LatticePath::points() const {
  std::vector<GridPoint> pts;
  pts.reserve(steps_.size() + 1);
  GridPoint p;
  pts.push_back(p);
  for (Step s : steps_) {
    if (s == Step::N)
      ++p.y;
    else
      ++p.x;
    pts.push_back(p);
  }
  return pts;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::N ? 'N' : 'E');
  return out;
}

LatticePath parse_path(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("lattice path: empty string");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'N')
      steps.push_back(Step::N);
    else if (c == 'E')
      steps.push_back(Step::E);
    else
      throw std::invalid_argument("lattice path: invalid character '" + std::string(1, c) + "' in \"" +
                                  std::string(text) + "\"");
  }
  return LatticePath(std::move(steps));
}

LatticePath dyck_nu(int n) {
  if (n < 1) throw std::invalid_argument("dyck_nu: n must be positive");
  std::vector<Step> steps;
  for (int i = 0; i < n; ++i) {
    steps.push_back(Step::N);
    steps.push_back(Step::E);
  }
  return LatticePath(std::move(steps));
}

LatticePath shifted_dyck_nu(int n) {
  if (n < 1) throw std::invalid_argument("shifted_dyck_nu: n must be positive");
  std::vector<Step> steps{Step::E};
  for (int i = 1; i < n; ++i) {
    steps.push_back(Step::N);
    steps.push_back(Step::E);
  }
  return LatticePath(std::move(steps));
}

NuContext::NuContext(LatticePath nu) : nu_(std::move(nu)), heights_(nu_.heights()) {
  fixed_.assign(static_cast<std::size_t>(nu_.north_count()) + 1, 0);
  for (std::size_t i = 0; i < heights_.size(); ++i) fixed_[static_cast<std::size_t>(heights_[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < nu_.length(); ++i)
    if (nu_.steps()[i] == Step::E) east_floor_.push_back(heights_[i]);
  height_lanes_.assign(heights_.begin(), heights_.end());
  fixed_lanes_.assign(fixed_.begin(), fixed_.end());
}

std::shared_ptr<const NuContext> NuContext::make(LatticePath nu) {
  if (nu.length() == 0) throw std::invalid_argument("NuContext: empty path");
  if (nu.length() > kMaxRepresentableEll)
    throw std::invalid_argument("NuContext: path length " + std::to_string(nu.length()) +
                                " exceeds the representable limit " + std::to_string(kMaxRepresentableEll));
  return std::shared_ptr<const NuContext>(new NuContext(std::move(nu)));
}

int horizontal_distance(const NuContext& ctx, GridPoint point) {
  if (point.y < 0 || point.y > ctx.top() || point.x < 0)
    throw std::domain_error("horizontal_distance: point outside the bounding box of ν");
  const int d = ctx.rightmost_x(point.y) - point.x;
  if (d < 0) throw std::domain_error("horizontal_distance: point lies strictly right of ν");
  return d;
}

bool lies_weakly_above(const LatticePath& mu, const NuContext& ctx) {
  if (mu.length() != ctx.ell() || mu.north_count() != ctx.top())
    throw std::invalid_argument("lies_weakly_above: endpoint mismatch between " + mu.to_string() + " and " +
                                ctx.nu().to_string());
  // The k-th E step of mu must not be lower than the k-th E step of ν.
  int y = 0;
  std::size_t k = 0;
  for (Step s : mu.steps()) {
    if (s == Step::N) {
      ++y;
    } else {
      if (y < ctx.east_floor_[k]) return false;
      ++k;
    }
  }
  return true;
}

namespace {

void enumerate_from(const NuContext& ctx, std::vector<Step>& prefix, int x, int y, std::vector<LatticePath>& out) {
  if (prefix.size() == ctx.ell()) {
    out.emplace_back(prefix);
    return;
  }
  if (y < ctx.top()) {
    prefix.push_back(Step::N);
    enumerate_from(ctx, prefix, x, y + 1, out);
    prefix.pop_back();
  }
  if (x < ctx.width() && x + 1 <= ctx.rightmost_x(y)) {
    prefix.push_back(Step::E);
    enumerate_from(ctx, prefix, x + 1, y, out);
    prefix.pop_back();
  }
}

std::vector<int> distances_along(const LatticePath& mu, const NuContext& ctx) {
  const auto pts = mu.points();
  std::vector<int> d(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) d[i] = horizontal_distance(ctx, pts[i]);
  return d;
}

// First index after `start` whose distance equals that of `start`.
std::size_t matching_endpoint(const std::vector<int>& dist, std::size_t start) {
  for (std::size_t j = start + 1; j < dist.size(); ++j)
    if (dist[j] == dist[start]) return j;
  return dist.size();
}

}  // namespace

std::vector<LatticePath> enumerate_tam(const NuContext& ctx, EnumOptions opts) {
  check_ell_bound(ctx.ell(), opts, "enumerate_tam");
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  prefix.reserve(ctx.ell());
  enumerate_from(ctx, prefix, 0, 0, out);
  return out;
}

std::vector<LatticePath> covers_up(const LatticePath& mu, const NuContext& ctx) {
  const auto& s = mu.steps();
  const auto dist = distances_along(mu, ctx);
  std::vector<LatticePath> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] != Step::E || s[i + 1] != Step::N) continue;
    // mu = X E D Y with D spanning points i+1 .. j.
    const std::size_t j = matching_endpoint(dist, i + 1);
    if (j == dist.size()) throw std::logic_error("covers_up: subpath endpoint not found");
    std::vector<Step> shifted(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
    shifted.insert(shifted.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1), s.begin() + static_cast<std::ptrdiff_t>(j));
    shifted.push_back(Step::E);
    shifted.insert(shifted.end(), s.begin() + static_cast<std::ptrdiff_t>(j), s.end());
    out.emplace_back(std::move(shifted));
  }
  return out;
}

std::vector<LatticePath> covers_down(const LatticePath& mu, const NuContext& ctx) {
  const auto& s = mu.steps();
  const auto dist = distances_along(mu, ctx);
  std::vector<LatticePath> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    // mu = X D E Y where D starts with N at point a; shifting D right needs room.
    if (s[a] != Step::N || dist[a] == 0) continue;
    const std::size_t b = matching_endpoint(dist, a);
    if (b >= s.size() || s[b] != Step::E) continue;
    std::vector<Step> shifted(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(a));
    shifted.push_back(Step::E);
    shifted.insert(shifted.end(), s.begin() + static_cast<std::ptrdiff_t>(a), s.begin() + static_cast<std::ptrdiff_t>(b));
    shifted.insert(shifted.end(), s.begin() + static_cast<std::ptrdiff_t>(b + 1), s.end());
    out.emplace_back(std::move(shifted));
  }
  return out;
}

LatticePath top_path(const NuContext& ctx) {
  std::vector<Step> steps(static_cast<std::size_t>(ctx.top()), Step::N);
  steps.insert(steps.end(), static_cast<std::size_t>(ctx.width()), Step::E);
  return LatticePath(std::move(steps));
}

}  // namespace tamaripop
