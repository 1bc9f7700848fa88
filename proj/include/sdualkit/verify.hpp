#pragma once

// Built-in verification suite: worked examples with known answers plus the
// randomized invariant checks, each reported by name.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sdualkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::size_t failures() const;
};

/// Seed used when SDUALKIT_SEED is unset.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// SDUALKIT_SEED if set to an unsigned integer, else kDefaultSeed.
std::uint64_t seed_from_environment();

std::vector<std::string> verify_check_names();

/// Runs every check whose name contains `filter` (all when empty). Lines of
/// the form `PASS  <name>  <detail>` are written to `out` in a fixed order.
VerifyReport run_verify(std::string_view filter, std::uint64_t seed, std::ostream &out);

} // namespace sdualkit
