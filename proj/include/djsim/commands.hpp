#pragma once

// Subcommand bodies for the djsim CLI. Each returns a Report on success and
// throws a djsim error on bad input; main() maps exceptions to exit codes.

#include <cstdint>
#include <optional>
#include <string>

#include "djsim/report.hpp"

namespace djsim::cli {

/// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,   // verify found a failing invariant
  kExitUsage = 2,         // bad flags, bad letters, unparsable text
  kExitSize = 3,          // oracle length not a power of two, caps exceeded
  kExitPromise = 4,       // oracle neither constant nor balanced
  kExitInternal = 5,
};

enum class DeutschMode { Quantum, Classical, Both };

DeutschMode parse_mode(const std::string& text);

/// An existing file is read; otherwise the argument is the bit string itself.
std::string load_oracle_text(const std::string& arg);

Report cmd_truth_table();
Report cmd_inspect(const std::string& wiring);
Report cmd_deutsch(const std::string& oracle, DeutschMode mode,
                   std::optional<std::uint64_t> seed, std::size_t shots = 1);
Report cmd_verify(std::size_t max_n, std::size_t enumeration_cap = 3);

struct MzArgs {
  std::optional<double> phi0;
  std::optional<double> phi1;
  std::optional<std::string> oracle;
  std::optional<double> epsilon;
};
Report cmd_mz(const MzArgs& args);

Report cmd_nwire(const std::string& cables);

}  // namespace djsim::cli
