#include "djsim/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "djsim/deutsch.hpp"
#include "djsim/errors.hpp"
#include "djsim/interferometer.hpp"
#include "djsim/switchboard.hpp"
#include "djsim/verify.hpp"

namespace djsim::cli {

namespace sb = switchboard;
using deutsch::Classification;
using deutsch::FunctionTable;

DeutschMode parse_mode(const std::string& text) {
  if (text == "quantum") return DeutschMode::Quantum;
  if (text == "classical") return DeutschMode::Classical;
  if (text == "both") return DeutschMode::Both;
  throw ParseError("mode must be quantum, classical, or both; got '" + text + "'");
}

namespace {

std::string_view mode_name(DeutschMode m) {
  switch (m) {
    case DeutschMode::Quantum:
      return "quantum";
    case DeutschMode::Classical:
      return "classical";
    case DeutschMode::Both:
      return "both";
  }
  return "?";
}

std::string verdict_name(Classification c) { return std::string(deutsch::to_string(c)); }

Json transcript_json(const deutsch::QueryLog& log, std::size_t input_bits) {
  Json rows = Json::array();
  for (const auto& q : log.transcript()) {
    Json r = Json::object();
    if (q.input) {
      r["input"] = qsim::BasisIndex(*q.input, input_bits).label();
    } else {
      r["input"] = "superposition";
    }
    if (q.output) {
      r["output"] = static_cast<int>(*q.output);
    } else {
      r["output"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string load_oracle_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read oracle file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

Report cmd_truth_table() {
  Report r{"truth-table"};
  Json rows = Json::array();
  for (bool light : {true, false}) {
    for (auto [left, right] : {std::pair{sb::SwitchPos::Up, sb::SwitchPos::Up},
                               std::pair{sb::SwitchPos::Down, sb::SwitchPos::Down},
                               std::pair{sb::SwitchPos::Up, sb::SwitchPos::Down},
                               std::pair{sb::SwitchPos::Down, sb::SwitchPos::Up}}) {
      const sb::WiringSet s = sb::consistent_wirings({left, right, light});
      bool balanced = false;
      bool constant = false;
      for (sb::Wiring w : s.members()) (sb::is_balanced(w) ? balanced : constant) = true;
      Json row = Json::object();
      row["left"] = sb::to_string(left);
      row["right"] = sb::to_string(right);
      row["light"] = light ? "on" : "off";
      row["wirings"] = s.to_string();
      row["mixes_classes"] = balanced && constant;
      rows.push_back(std::move(row));
    }
  }
  r.results["rows"] = std::move(rows);
  r.results["single_observation_insufficient"] = sb::single_observation_insufficient();
  return r;
}

Report cmd_inspect(const std::string& wiring) {
  const sb::Wiring w = sb::parse_wiring(wiring);
  const sb::InspectionResult res = sb::alice_inspect(w);
  Report r{"inspect"};
  r.inputs["wiring"] = std::string(1, sb::letter(w));
  r.results["wiring"] = std::string(1, sb::letter(w));
  r.results["lower_terminal_count"] = sb::lower_terminal_count(w);
  r.results["final"] = sb::to_string(res.final);
  r.results["verdict"] = verdict_name(res.verdict);
  r.results["flip_count"] = sb::flip_count(w);
  r.results["is_balanced"] = sb::is_balanced(w);
  return r;
}

Report cmd_deutsch(const std::string& oracle, DeutschMode mode,
                   std::optional<std::uint64_t> seed, std::size_t shots) {
  const FunctionTable f = FunctionTable::parse(load_oracle_text(oracle));
  const Classification truth = deutsch::classify_table(f);
  if (truth == Classification::Neither) {
    throw PromiseViolation("promise violation: oracle " + f.to_string() +
                           " is neither constant nor balanced");
  }

  Report r{"deutsch"};
  r.inputs["oracle"] = f.to_string();
  r.inputs["mode"] = mode_name(mode);
  if (seed) r.inputs["seed"] = *seed;
  r.results["input_bits"] = f.input_bits();

  std::optional<Classification> verdict;
  if (mode != DeutschMode::Classical) {
    const deutsch::QuantumResult q = deutsch::classify_quantum(f);
    verdict = q.classification;
    r.results["quantum_classification"] = verdict_name(q.classification);
    r.results["quantum_queries"] = q.log.queries();
    r.results["quantum_certainty"] = q.certainty;
  }
  if (mode != DeutschMode::Quantum) {
    deutsch::BlackBox box(f);
    const deutsch::ClassicalResult c = deutsch::classify_classical(box);
    if (verdict && *verdict != c.classification) {
      throw NumericError("quantum and classical verdicts disagree");
    }
    verdict = c.classification;
    r.results["classical_classification"] = verdict_name(c.classification);
    r.results["classical_queries"] = c.log.queries();
    r.results["classical_transcript"] = transcript_json(c.log, f.input_bits());
  }
  r.results["classification"] = verdict_name(*verdict);

  if (seed && mode != DeutschMode::Classical) {
    const qsim::StateVector state = deutsch::circuit_state(f);
    Json samples = Json::array();
    for (std::uint64_t idx : qsim::sample(state, shots, *seed)) {
      // Drop the target qubit; report the input register reading.
      samples.push_back(qsim::BasisIndex(idx >> 1, f.input_bits()).label());
    }
    r.results["sampled_input_register"] = std::move(samples);
  }
  return r;
}

Report cmd_verify(std::size_t max_n, std::size_t enumeration_cap) {
  const verify::Options opts{max_n, enumeration_cap};
  try {
    verify::validate(opts);
  } catch (const SizeError& e) {
    throw ParseError(std::string("argument error: ") + e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  const auto checks = verify::run_all(opts);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;

  Report r{"verify"};
  r.inputs["max_n"] = max_n;
  r.inputs["enumeration_cap"] = enumeration_cap;
  Json rows = Json::array();
  std::size_t passed = 0;
  std::size_t cases = 0;
  for (const auto& c : checks) {
    Json row = Json::object();
    row["id"] = c.id;
    row["check"] = c.title;
    row["cases"] = c.cases;
    row["result"] = c.passed ? "PASS" : "FAIL";
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    passed += c.passed ? 1 : 0;
    cases += c.cases;
  }
  r.results["checks"] = std::move(rows);
  r.results["passed"] = passed;
  r.results["failed"] = checks.size() - passed;
  r.results["cases"] = cases;
  r.results["seconds"] = std::round(dt.count() * 1000.0) / 1000.0;
  r.success = passed == checks.size();
  return r;
}

Report cmd_mz(const MzArgs& args) {
  const bool have_phases = args.phi0.has_value() || args.phi1.has_value();
  if (have_phases == args.oracle.has_value()) {
    throw ParseError("mz: give either two phases or --oracle <bits>");
  }
  if (have_phases && !(args.phi0 && args.phi1)) {
    throw ParseError("mz: two phases are required");
  }

  Report r{"mz"};
  interferometer::MzNetwork net;
  if (args.oracle) {
    const FunctionTable f = FunctionTable::parse(load_oracle_text(*args.oracle));
    if (f.input_bits() != 1) {
      throw SizeError("mz: the interferometer takes a one-bit oracle (2 characters)");
    }
    net = interferometer::deutsch_phases(f);
    r.inputs["oracle"] = f.to_string();
  } else {
    net = {*args.phi0, *args.phi1, 0};
    if (!std::isfinite(net.phase_upper) || !std::isfinite(net.phase_lower)) {
      throw ParseError("mz: phases must be finite");
    }
    r.inputs["phi0"] = net.phase_upper;
    r.inputs["phi1"] = net.phase_lower;
  }
  if (args.epsilon) r.inputs["epsilon"] = *args.epsilon;

  const interferometer::Intensities out = interferometer::mz_intensities(net);
  r.results["phase_upper"] = net.phase_upper;
  r.results["phase_lower"] = net.phase_lower;
  r.results["phase_difference"] =
      interferometer::wrap_phase(net.phase_upper - net.phase_lower);
  r.results["port0"] = out.port0;
  r.results["port1"] = out.port1;
  r.results["detector"] = out.port0 >= out.port1 ? 0 : 1;
  if (args.oracle) {
    r.results["classification"] =
        out.port0 >= out.port1 ? "Constant" : "Balanced";
  }

  if (args.epsilon) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> targets{net.phase_upper - net.phase_lower};
    for (double t : {0.0, pi / 4, pi / 2, 3 * pi / 4, pi}) targets.push_back(t);
    Json rows = Json::array();
    for (const auto& p : interferometer::phase_error_sweep(targets, *args.epsilon)) {
      Json row = Json::object();
      row["target"] = p.target;
      row["worst_error"] = p.worst_error;
      rows.push_back(std::move(row));
    }
    r.results["sweep"] = std::move(rows);
  }
  return r;
}

Report cmd_nwire(const std::string& cables) {
  const sb::CableRun run = sb::CableRun::parse(cables);
  const sb::NwireResult res = sb::nwire_inspect(run);
  Report r{"nwire"};
  r.inputs["cables"] = cables;
  Json rows = Json::array();
  for (std::size_t i = 0; i < res.per_cable.size(); ++i) {
    Json row = Json::object();
    row["cable"] = i;
    row["wiring"] = std::string(1, sb::letter(run.cables()[i]));
    row["lower_terminal_count"] = res.per_cable[i];
    rows.push_back(std::move(row));
  }
  r.results["cables"] = std::move(rows);
  r.results["wires"] = run.wire_count();
  r.results["total"] = res.total;
  r.results["final"] = sb::to_string(res.final);
  r.results["parity"] = sb::to_string(res.parity);
  return r;
}

}  // namespace djsim::cli
