#include "tamaripop/bounds.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace tamaripop {

std::size_t max_ell() {
  const char* env = std::getenv("TAMARIPOP_MAX_ELL");
  if (env == nullptr) return kDefaultMaxEll;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultMaxEll;
  return value;
}

std::size_t max_perm_n() { return kDefaultMaxPermN; }

void check_ell_bound(std::size_t ell, EnumOptions opts, const std::string& what) {
  if (opts.force || ell <= max_ell()) return;
  throw BoundError(what + ": path length " + std::to_string(ell) + " exceeds the enumeration bound " +
                   std::to_string(max_ell()) + " (use --force or TAMARIPOP_MAX_ELL)");
}

void check_perm_bound(std::size_t n, EnumOptions opts, const std::string& what) {
  if (opts.force || n <= max_perm_n()) return;
  throw BoundError(what + ": permutation size " + std::to_string(n) + " exceeds the enumeration bound " +
                   std::to_string(max_perm_n()) + " (use --force)");
}

}  // namespace tamaripop
