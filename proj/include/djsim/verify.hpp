#pragma once

// Exhaustive invariant suite behind `djsim verify`. Each check enumerates its
// whole domain (tables, wirings, cable runs, phase grids) and reports how many
// cases it covered. Table-level checks run in parallel; results are merged in
// table order so the report is deterministic.

#include <cstddef>
#include <string>
#include <vector>

namespace djsim::verify {

inline constexpr std::size_t kDefaultMaxN = 3;
/// Largest max_n accepted when the enumeration cap is raised.
inline constexpr std::size_t kMaxEnumerationCap = 4;
inline constexpr std::size_t kMaxCableRun = 6;
inline constexpr std::size_t kPhaseGridPoints = 100;

struct Options {
  std::size_t max_n = kDefaultMaxN;
  /// Upper bound on max_n; 3 by default, 4 when explicitly raised.
  std::size_t enumeration_cap = kDefaultMaxN;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::size_t cases = 0;
  /// First failure, empty on success.
  std::string detail;
  double seconds = 0.0;
};

/// Throws SizeError when max_n is outside [1, enumeration_cap] or the cap
/// exceeds kMaxEnumerationCap.
void validate(const Options& opts);

std::vector<CheckResult> run_all(const Options& opts);

}  // namespace djsim::verify
