#pragma once

// Property suites behind `tamaripop verify`. Each suite is a list of named
// checks; a check either passes or carries the first counterexample found.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamaripop/json_io.hpp"

namespace tamaripop {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  Json counterexample;  // null when passed
  double wall_ms = 0.0;
};

/// Unset fields fall back to the per-suite defaults listed by
/// suite_defaults(). For the ν-corpus suites (`bijection`, `pop-oracle`)
/// max_n bounds the length ℓ of ν rather than the Tamari index.
struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<int> max_t;
  std::uint64_t seed = 1;
  bool timings = false;
};

struct VerificationReport {
  std::string suite;
  Json parameters;
  std::vector<CheckResult> checks;  // sorted by name
  bool passed() const;
};

/// Runnable suite names, `all` last.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and BoundError when a
/// requested range exceeds the enumeration bounds.
VerificationReport run_suite(std::string_view name, const VerifyOptions& opts = {});

/// wall_ms is only emitted when `timings` is set so that reports stay
/// byte-identical across runs by default.
Json report_to_json(const VerificationReport& report, bool timings);

}  // namespace tamaripop
