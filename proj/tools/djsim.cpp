#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "djsim/commands.hpp"
#include "djsim/errors.hpp"

namespace cli = djsim::cli;

int main(int argc, char** argv) {
  CLI::App app{"djsim: constant-vs-balanced oracles in the quantum and switch-wiring worlds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  std::optional<std::uint64_t> seed;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", seed, "Seed for demonstration sampling");

  auto* truth = app.add_subcommand("truth-table", "Observations and the wirings consistent with each");

  std::string wiring;
  auto* inspect = app.add_subcommand("inspect", "Flip-on-lower-terminal inspection of one wiring");
  inspect->add_option("wiring", wiring, "Wiring letter a-d")->required();

  std::string oracle;
  std::string mode = "both";
  std::size_t shots = 1;
  auto* deutsch = app.add_subcommand("deutsch", "Classify an oracle with the quantum and classical solvers");
  deutsch->add_option("oracle", oracle, "Bit string or path to an oracle file")->required();
  deutsch->add_option("--mode", mode, "quantum, classical, or both")
      ->check(CLI::IsMember({"quantum", "classical", "both"}));
  deutsch->add_option("--shots", shots, "Samples to draw when --seed is given")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));

  std::size_t max_n = 3;
  std::size_t enum_cap = 3;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive invariant suite");
  verify->add_option("--max-n", max_n, "Largest input width to enumerate");
  verify->add_option("--enum-cap", enum_cap, "Raise the enumeration cap (at most 4)");

  cli::MzArgs mz_args;
  std::vector<double> phases;
  auto* mz = app.add_subcommand("mz", "Mach-Zehnder detector intensities");
  mz->add_option("phases", phases, "Upper and lower arm phases in radians")->expected(0, 2);
  mz->add_option("--oracle", mz_args.oracle, "One-bit oracle to encode as phases");
  mz->add_option("--epsilon", mz_args.epsilon, "Phase error for the sensitivity sweep")
      ->check(CLI::NonNegativeNumber);

  std::string cables;
  auto* nwire = app.add_subcommand("nwire", "Switch position after wiring a run of cables");
  nwire->add_option("cables", cables, "One letter a-d per cable")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    const cli::Format format = cli::parse_format(format_text);
    cli::Report report;
    if (truth->parsed()) {
      report = cli::cmd_truth_table();
    } else if (inspect->parsed()) {
      report = cli::cmd_inspect(wiring);
    } else if (deutsch->parsed()) {
      report = cli::cmd_deutsch(oracle, cli::parse_mode(mode), seed, shots);
    } else if (verify->parsed()) {
      report = cli::cmd_verify(max_n, enum_cap);
    } else if (mz->parsed()) {
      if (phases.size() == 1) throw djsim::ParseError("mz: two phases are required");
      if (phases.size() == 2) {
        mz_args.phi0 = phases[0];
        mz_args.phi1 = phases[1];
      }
      report = cli::cmd_mz(mz_args);
    } else if (nwire->parsed()) {
      report = cli::cmd_nwire(cables);
    }
    std::cout << report.render(format);
    return report.success ? cli::kExitOk : cli::kExitCheckFailed;
  } catch (const djsim::PromiseViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitPromise;
  } catch (const djsim::SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitSize;
  } catch (const djsim::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInternal;
  }
}
