#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hodge::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs one of "paper-examples", "properties", "cross-checks" or "all".
/// Randomized batteries draw one generator per trial from the seed, so the
/// report does not depend on the thread count.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed = kDefaultSeed);

const std::vector<std::string>& suite_names();

}  // namespace hodge::verify
