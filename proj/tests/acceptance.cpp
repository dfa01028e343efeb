// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
// Expected values come from independent routes (closed forms, direct
// enumeration, hand-built truth tables) rather than from the library paths
// under test. Tolerances and time limits are fixed here.

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "djsim/deutsch.hpp"
#include "djsim/interferometer.hpp"
#include "djsim/switchboard.hpp"

using namespace djsim;
using deutsch::Classification;
using deutsch::FunctionTable;
using switchboard::SwitchPos;
using switchboard::Wiring;

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kCircuitTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0: exact check, no time budget
  std::function<void(Outcome&)> body;
};

// Classification straight from the definition, by counting.
Classification by_counting(const std::vector<int>& bits) {
  int ones = 0;
  for (int b : bits) ones += b;
  if (ones == 0 || ones == static_cast<int>(bits.size())) return Classification::Constant;
  if (2 * ones == static_cast<int>(bits.size())) return Classification::Balanced;
  return Classification::Neither;
}

// Every promise table for n, generated by popcount over all masks.
std::vector<std::vector<int>> promise_family(std::size_t n) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
    const auto ones = static_cast<std::size_t>(std::popcount(m));
    if (ones != 0 && ones != len && 2 * ones != len) continue;
    std::vector<int> bits(len);
    for (std::size_t x = 0; x < len; ++x) bits[x] = static_cast<int>((m >> x) & 1U);
    out.push_back(std::move(bits));
  }
  return out;
}

FunctionTable to_table(const std::vector<int>& bits) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < bits.size()) ++n;
  return {n, std::vector<std::uint8_t>(bits.begin(), bits.end())};
}

std::string show(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Terminal map written out by hand, independent of the
// switchboard implementation.
int hand_terminal(Wiring w, int x) {
  switch (w) {
    case Wiring::A: return x;
    case Wiring::B: return 1 - x;
    case Wiring::C: return 0;
    case Wiring::D: return 1;
  }
  return -1;
}

// --------------------------------------------------------------------------

void one_vs_two(Outcome& o) {
  const std::vector<std::vector<int>> tables = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  for (const auto& bits : tables) {
    const FunctionTable f = to_table(bits);
    const auto q = deutsch::classify_quantum(f);
    o.require(q.log.queries() == 1, show(bits) + ": quantum oracle applications != 1");
    o.require(std::abs(q.certainty - 1.0) <= kCircuitTol, show(bits) + ": certainty");
    deutsch::BlackBox box(f);
    const auto c = deutsch::classify_classical(box);
    o.require(c.log.queries() == 2, show(bits) + ": classical queries != 2");
    o.require(q.classification == by_counting(bits) && c.classification == by_counting(bits),
              show(bits) + ": verdict");
  }
}

void exhaustive(Outcome& o) {
  const std::size_t expected_sizes[] = {0, 4, 8, 72};
  const std::size_t expected_worst[] = {0, 2, 3, 5};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto family = promise_family(n);
    o.require(family.size() == expected_sizes[n], "family size n=" + std::to_string(n));
    std::size_t worst = 0;
    for (const auto& bits : family) {
      const Classification truth = by_counting(bits);
      const FunctionTable f = to_table(bits);
      o.require(deutsch::classify_table(f) == truth, show(bits) + ": classify_table");
      const auto q = deutsch::classify_quantum(f);
      o.require(q.classification == truth, show(bits) + ": quantum");
      o.require(q.log.queries() == 1, show(bits) + ": quantum queries");
      o.require(std::abs(q.certainty - 1.0) <= kCircuitTol, show(bits) + ": certainty");
      deutsch::BlackBox box(f);
      const auto c = deutsch::classify_classical(box);
      o.require(c.classification == truth, show(bits) + ": classical");
      if (truth == Classification::Constant) {
        o.require(c.log.queries() == expected_worst[n], show(bits) + ": constant not worst case");
      }
      worst = std::max(worst, c.log.queries());
    }
    o.require(worst == expected_worst[n], "worst case n=" + std::to_string(n) + " was " +
                                              std::to_string(worst));
  }
}

void truth_table(Outcome& o) {
  // (left, right) -> wirings that light the bulb.
  struct Row {
    SwitchPos left, right;
    switchboard::WiringSet on;
  };
  using WS = switchboard::WiringSet;
  const Row rows[] = {
      {SwitchPos::Up, SwitchPos::Up, WS::of({Wiring::A, Wiring::C})},
      {SwitchPos::Down, SwitchPos::Down, WS::of({Wiring::A, Wiring::D})},
      {SwitchPos::Up, SwitchPos::Down, WS::of({Wiring::B, Wiring::D})},
      {SwitchPos::Down, SwitchPos::Up, WS::of({Wiring::B, Wiring::C})},
  };
  const WS off_sets[] = {WS::of({Wiring::B, Wiring::D}), WS::of({Wiring::B, Wiring::C}),
                         WS::of({Wiring::A, Wiring::C}), WS::of({Wiring::A, Wiring::D})};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& r = rows[i];
    o.require(switchboard::consistent_wirings({r.left, r.right, true}) == r.on,
              "row " + std::to_string(i + 1) + " light on");
    o.require(switchboard::consistent_wirings({r.left, r.right, false}) == off_sets[i],
              "row " + std::to_string(i + 1) + " light off");
    for (const WS s : {r.on, off_sets[i]}) {
      bool bal = false, con = false;
      for (Wiring w : s.members()) (hand_terminal(w, 0) != hand_terminal(w, 1) ? bal : con) = true;
      o.require(bal && con, "row " + std::to_string(i + 1) + " does not mix classes");
    }
  }
  o.require(switchboard::single_observation_insufficient(),
            "single_observation_insufficient returned false");
}

void alice(Outcome& o) {
  for (Wiring w : switchboard::kAllWirings) {
    const std::string name(1, switchboard::letter(w));
    const auto r = switchboard::alice_inspect(w);
    const int lower = hand_terminal(w, 0) + hand_terminal(w, 1);
    o.require((r.verdict == Classification::Balanced) == switchboard::is_balanced(w),
              name + ": verdict vs is_balanced");
    o.require((r.final == SwitchPos::Down) == (lower % 2 == 1), name + ": final position");
    o.require(switchboard::lower_terminal_count(w) == static_cast<unsigned>(lower),
              name + ": lower terminal count");
    const std::vector<int> bits = {hand_terminal(w, 0), hand_terminal(w, 1)};
    const FunctionTable f = to_table(bits);
    o.require(deutsch::classify_table(f) == r.verdict, name + ": table verdict");
    o.require(deutsch::classify_quantum(f).classification == r.verdict, name + ": quantum verdict");
  }
}

void nwire(Outcome& o) {
  std::size_t runs_at_six = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * k)); ++code) {
      std::vector<Wiring> cables(k);
      int x = 0;
      for (std::size_t i = 0; i < k; ++i) {
        cables[i] = static_cast<Wiring>((code >> (2 * i)) & 3U);
        x ^= hand_terminal(cables[i], 0) ^ hand_terminal(cables[i], 1);
      }
      const auto r = switchboard::nwire_inspect(switchboard::CableRun(cables));
      o.require((r.parity == switchboard::Parity::Odd) == (x == 1),
                "run code " + std::to_string(code) + " length " + std::to_string(k));
      if (k == 6) ++runs_at_six;
    }
  }
  o.require(runs_at_six == 4096, "expected 4096 runs of length 6");
}

void parity_laws(Outcome& o) {
  for (Wiring w : switchboard::kAllWirings) {
    int flips = 0;
    for (int x = 0; x < 2; ++x) flips += hand_terminal(w, x) != x ? 1 : 0;
    o.require(static_cast<int>(switchboard::flip_count(w)) == flips,
              std::string("flip_count ") + switchboard::letter(w));
    o.require((flips % 2 == 0) == switchboard::is_balanced(w),
              std::string("flip parity law ") + switchboard::letter(w));
  }
  std::size_t checked_n3 = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t len = std::size_t{1} << n;
    std::vector<std::vector<int>> tables;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
      std::vector<int> bits(len);
      for (std::size_t x = 0; x < len; ++x) bits[x] = static_cast<int>((m >> x) & 1U);
      tables.push_back(std::move(bits));
    }
    for (auto& bits : promise_family(n)) tables.push_back(std::move(bits));
    for (const auto& bits : tables) {
      int ones = 0;
      for (int b : bits) ones += b;
      o.require((switchboard::table_parity(to_table(bits)) == switchboard::Parity::Odd) ==
                    (ones % 2 == 1),
                show(bits) + ": table parity");
    }
    if (n == 3) checked_n3 = tables.size();
  }
  o.require(checked_n3 == 256 + 72, "n=3 sweep size " + std::to_string(checked_n3));
}

void interferometer_equivalence(Outcome& o) {
  constexpr int kGrid = 100;
  const double two_pi = 2 * std::numbers::pi;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double a = two_pi * i / kGrid, b = two_pi * j / kGrid;
      const auto got = interferometer::mz_intensities({a, b, 0});
      const double c = std::cos((a - b) / 2), s = std::sin((a - b) / 2);
      o.require(std::abs(got.port0 - c * c) <= kAlgebraTol &&
                    std::abs(got.port1 - s * s) <= kAlgebraTol,
                "closed form at grid (" + std::to_string(i) + "," + std::to_string(j) + ")");
      o.require(std::abs(got.port0 + got.port1 - 1.0) <= kAlgebraTol, "intensity sum");
    }
  }
  for (const auto& bits : std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    const FunctionTable f = to_table(bits);
    const auto det = interferometer::mz_intensities(interferometer::deutsch_phases(f));
    const bool detector0 = det.port0 > det.port1;
    o.require(detector0 == (deutsch::classify_quantum(f).classification == Classification::Constant),
              show(bits) + ": detector vs quantum verdict");
    o.require(std::max(det.port0, det.port1) >= 1.0 - kCircuitTol, show(bits) + ": detector certainty");
  }
}

void oracle_algebra(Outcome& o) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& bits : promise_family(n)) {
      const auto u = deutsch::oracle_unitary(to_table(bits));
      const std::size_t d = u.dim();
      for (std::size_t col = 0; col < d; ++col) {
        // Only entry in this column: row = col with y flipped by f(x).
        const std::size_t want = col ^ static_cast<std::size_t>(bits[col >> 1]);
        for (std::size_t row = 0; row < d; ++row) {
          const qsim::Complex expect(row == want ? 1.0 : 0.0);
          o.require(u(row, col) == expect, show(bits) + ": not the XOR permutation");
        }
      }
      o.require((u * u).max_distance(qsim::Unitary::identity(d)) <= kAlgebraTol,
                show(bits) + ": U^2 != I");
    }
  }
}

void relabel(Outcome& o) {
  for (Wiring w : switchboard::kAllWirings) {
    const Wiring r = switchboard::relabel_right(w);
    o.require(switchboard::is_balanced(r) == switchboard::is_balanced(w), "relabel is_balanced");
    o.require(switchboard::alice_inspect(r).verdict == switchboard::alice_inspect(w).verdict,
              "relabel alice verdict");
    o.require(hand_terminal(r, 0) == 1 - hand_terminal(w, 0) &&
                  hand_terminal(r, 1) == 1 - hand_terminal(w, 1),
              "relabel is not the right-switch label swap");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& bits : promise_family(n)) {
      std::vector<int> flipped(bits.size());
      for (std::size_t i = 0; i < bits.size(); ++i) flipped[i] = 1 - bits[i];
      const FunctionTable f = to_table(bits), g = to_table(flipped);
      o.require(deutsch::classify_table(f) == deutsch::classify_table(g), show(bits) + ": table");
      o.require(deutsch::classify_quantum(f).classification ==
                    deutsch::classify_quantum(g).classification,
                show(bits) + ": quantum");
      deutsch::BlackBox bf(f), bg(g);
      const auto cf = deutsch::classify_classical(bf), cg = deutsch::classify_classical(bg);
      o.require(cf.classification == cg.classification && cf.log.queries() == cg.log.queries(),
                show(bits) + ": classical");
    }
  }
}

void cli_verify(Outcome& o) {
  const std::string cmd = std::string(DJSIM_CLI_PATH) + " --format json verify --max-n 3";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    o.require(false, "could not launch " + cmd);
    return;
  }
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = ::pclose(pipe);
  o.require(WIFEXITED(raw) && WEXITSTATUS(raw) == 0, "verify exit status nonzero");
  try {
    const auto j = nlohmann::json::parse(out);
    o.require(j["status"] == "ok", "verify status not ok");
    o.require(j["results"]["failed"] == 0, "verify reported failures");
    std::vector<std::string> ids;
    for (const auto& c : j["results"]["checks"]) ids.push_back(c["id"].get<std::string>());
    for (int k = 1; k <= 9; ++k) {
      o.require(std::find(ids.begin(), ids.end(), std::to_string(k)) != ids.end(),
                "verify did not run criterion " + std::to_string(k));
    }
  } catch (const std::exception& e) {
    o.require(false, std::string("unparsable verify output: ") + e.what());
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "one quantum query vs two classical observations at n=1", 1.0, one_vs_two},
      {2, "exhaustive correctness and classical worst case for n<=3", 10.0, exhaustive},
      {3, "truth-table rows and single-observation ambiguity", 0.0, truth_table},
      {4, "flip-on-lower-terminal inspection and cross-world agreement", 0.0, alice},
      {5, "N-wire parity vs brute-force XOR for all runs up to 6 cables", 1.0, nwire},
      {6, "flip-count and table parity laws", 0.0, parity_laws},
      {7, "Mach-Zehnder closed form, conservation, detector agreement", 1.0,
       interferometer_equivalence},
      {8, "oracle is an exact permutation and squares to identity", 5.0, oracle_algebra},
      {9, "relabel and complement symmetry of every verdict", 0.0, relabel},
      {10, "djsim verify --max-n 3 end to end", 30.0, cli_verify},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (c.time_limit_s > 0 && dt.count() >= c.time_limit_s) {
      o.require(false, "took " + std::to_string(dt.count()) + " s, limit " +
                           std::to_string(c.time_limit_s) + " s");
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  ("
         << static_cast<long>(dt.count() * 1000.0) << " ms)";
    if (!o.ok) line << "  -- " << o.why;
    std::cout << line.str() << '\n';
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << " ("
            << criteria.size() - failures << "/" << criteria.size() << ")\n";
  return failures == 0 ? 0 : 1;
}
