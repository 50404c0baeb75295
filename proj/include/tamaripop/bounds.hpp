#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamaripop {

/// Raised when an exhaustive enumeration would exceed the configured size
/// limit and the caller did not ask to override it.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard representation limit: bracket vectors are int8 lanes and descent
/// sets are 64-bit masks.
inline constexpr std::size_t kMaxRepresentableEll = 63;

inline constexpr std::size_t kDefaultMaxEll = 26;
inline constexpr std::size_t kDefaultMaxPermN = 9;

/// Global enumeration bound on the path length; `TAMARIPOP_MAX_ELL`
/// overrides the default when set to a positive integer.
std::size_t max_ell();

/// Enumeration bound on permutation size for S_n sweeps.
std::size_t max_perm_n();

struct EnumOptions {
  bool force = false;
};

/// Throws BoundError unless `ell <= max_ell()` or `opts.force`.
void check_ell_bound(std::size_t ell, EnumOptions opts, const std::string& what);

void check_perm_bound(std::size_t n, EnumOptions opts, const std::string& what);

}  // namespace tamaripop
