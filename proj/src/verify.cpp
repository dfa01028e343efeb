#include "djsim/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "djsim/deutsch.hpp"
#include "djsim/errors.hpp"
#include "djsim/interferometer.hpp"
#include "djsim/qsim.hpp"
#include "djsim/qsim_reference.hpp"
#include "djsim/switchboard.hpp"
#include "omp_util.hpp"

namespace djsim::verify {

namespace {

using deutsch::Classification;
using deutsch::FunctionTable;
using qsim::Complex;
using switchboard::Wiring;

class Tally {
 public:
  void pass() { ++cases_; }
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  void merge(std::size_t cases, const std::string& failure) {
    cases_ += cases;
    if (!failure.empty() && first_failure_.empty()) first_failure_ = failure;
  }
  CheckResult finish(std::string id, std::string title, double seconds) const {
    return {std::move(id), std::move(title), first_failure_.empty(), cases_,
            first_failure_, seconds};
  }

 private:
  std::size_t cases_ = 0;
  std::string first_failure_;
};

template <typename Fn>
CheckResult timed(std::string id, std::string title, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return t.finish(std::move(id), std::move(title), dt.count());
}

// Runs per_table over every table in parallel and merges in table order.
template <typename Fn>
void for_tables(Tally& t, const std::vector<FunctionTable>& tables, Fn&& per_table) {
  const auto count = static_cast<std::int64_t>(tables.size());
  std::vector<std::string> failures(tables.size());
  std::vector<std::size_t> cases(tables.size(), 0);
  DJSIM_OMP(parallel for schedule(dynamic, 1))
  for (std::int64_t i = 0; i < count; ++i) {
    Tally local;
    try {
      per_table(local, tables[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      local.check(false, tables[static_cast<std::size_t>(i)].to_string() +
                             ": exception: " + e.what());
    }
    const CheckResult r = local.finish({}, {}, 0.0);
    cases[static_cast<std::size_t>(i)] = r.cases;
    failures[static_cast<std::size_t>(i)] = r.detail;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) t.merge(cases[i], failures[i]);
}

std::vector<FunctionTable> promise_tables(std::size_t n, std::size_t cap) {
  std::vector<FunctionTable> out = deutsch::enumerate_functions(n, Classification::Constant);
  for (auto& f : deutsch::enumerate_functions(n, Classification::Balanced, cap)) {
    out.push_back(std::move(f));
  }
  return out;
}

qsim::StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return qsim::StateVector::from_amplitudes(std::move(amps));
}

std::string table_msg(const FunctionTable& f, const std::string& what) {
  return "table " + f.to_string() + ": " + what;
}

std::size_t worst_case_classical(std::size_t n) {
  return (std::size_t{1} << (n - 1)) + 1;
}

// ---- individual checks ----------------------------------------------------

CheckResult check_qsim_kernels() {
  return timed("Q", "state-vector kernel invariants", [](Tally& t) {
    std::mt19937_64 rng(20260101);
    const qsim::Unitary gates[] = {qsim::hadamard(), qsim::pauli_x(),
                                   interferometer::phase_shifter(0.7)};
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 8; ++trial) {
        const qsim::StateVector s = random_state(n, rng);
        for (const auto& g : gates) {
          for (std::size_t q = 0; q < n; ++q) {
            const auto out = qsim::apply(s, g, {q});
            t.check(std::abs(out.norm_squared() - 1.0) < qsim::kAlgebraTolerance,
                    "norm drift applying gate on qubit " + std::to_string(q));
            const std::vector<std::size_t> tq{q};
            const auto ref = qsim::reference::apply(s, g, tq);
            t.check(out.max_distance(ref) < qsim::kAlgebraTolerance,
                    "parallel and reference apply disagree");
          }
        }
        const auto p = qsim::probabilities(s);
        double sum = 0.0;
        bool in_range = true;
        for (double v : p) {
          sum += v;
          in_range = in_range && v >= 0.0 && v <= 1.0;
        }
        t.check(in_range && std::abs(sum - 1.0) < qsim::kAlgebraTolerance,
                "probabilities do not form a distribution");
        if (n >= 2) {
          const auto a = qsim::apply(qsim::apply(s, gates[0], {0}), gates[2], {n - 1});
          const auto b = qsim::apply(qsim::apply(s, gates[2], {n - 1}), gates[0], {0});
          t.check(a.max_distance(b) < qsim::kAlgebraTolerance,
                  "gates on disjoint qubits do not commute");
        }
      }
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const auto basis = qsim::StateVector::basis(qsim::BasisIndex(i, n));
        for (const auto& g : {qsim::hadamard(), qsim::pauli_x()}) {
          for (std::size_t q = 0; q < n; ++q) {
            const auto twice = qsim::apply(qsim::apply(basis, g, {q}), g, {q});
            t.check(twice.max_distance(basis) < qsim::kAlgebraTolerance,
                    "single-qubit involution failed on basis " + std::to_string(i));
          }
        }
      }
    }
  });
}

CheckResult check_one_vs_two() {
  return timed("1", "one quantum query vs two classical observations (n=1)",
               [](Tally& t) {
    for (const auto& f : promise_tables(1, 1)) {
      const auto q = deutsch::classify_quantum(f);
      t.check(q.log.queries() == 1, table_msg(f, "quantum used != 1 query"));
      t.check(std::abs(q.certainty - 1.0) < qsim::kCircuitTolerance,
              table_msg(f, "quantum certainty off"));
      deutsch::BlackBox box(f);
      const auto c = deutsch::classify_classical(box);
      t.check(c.log.queries() == 2, table_msg(f, "classical used != 2 queries"));
      t.check(q.classification == c.classification &&
                  c.classification == deutsch::classify_table(f),
              table_msg(f, "verdicts disagree"));
    }
  });
}

CheckResult check_exhaustive(const Options& opts) {
  return timed("2", "exhaustive classification agreement (n <= " +
                        std::to_string(opts.max_n) + ")",
               [&](Tally& t) {
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      const auto tables = promise_tables(n, opts.enumeration_cap);
      std::vector<std::size_t> queries(tables.size(), 0);
      std::vector<std::uint8_t> is_constant(tables.size(), 0);
      const auto count = static_cast<std::int64_t>(tables.size());
      std::vector<std::string> failures(tables.size());
      DJSIM_OMP(parallel for schedule(dynamic, 1))
      for (std::int64_t i = 0; i < count; ++i) {
        const auto& f = tables[static_cast<std::size_t>(i)];
        std::string& fail = failures[static_cast<std::size_t>(i)];
        try {
          const auto truth = deutsch::classify_table(f);
          const auto q = deutsch::classify_quantum(f);
          deutsch::BlackBox box(f);
          const auto c = deutsch::classify_classical(box);
          queries[static_cast<std::size_t>(i)] = c.log.queries();
          is_constant[static_cast<std::size_t>(i)] = truth == Classification::Constant;
          if (q.classification != truth) fail = table_msg(f, "quantum misclassified");
          else if (q.log.queries() != 1) fail = table_msg(f, "quantum query count != 1");
          else if (std::abs(q.certainty - 1.0) >= qsim::kCircuitTolerance)
            fail = table_msg(f, "quantum certainty off");
          else if (c.classification != truth) fail = table_msg(f, "classical misclassified");
          else if (c.log.queries() > worst_case_classical(n))
            fail = table_msg(f, "classical exceeded 2^(n-1)+1 queries");
        } catch (const std::exception& e) {
          fail = table_msg(f, e.what());
        }
      }
      for (const auto& fail : failures) t.merge(1, fail);

      std::size_t worst = 0;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        worst = std::max(worst, queries[i]);
        if (is_constant[i]) {
          t.check(queries[i] == worst_case_classical(n),
                  table_msg(tables[i], "constant table not at worst-case count"));
        }
      }
      t.check(worst == worst_case_classical(n),
              "n=" + std::to_string(n) + ": worst classical count " +
                  std::to_string(worst));
    }
  });
}

CheckResult check_truth_table() {
  using switchboard::SwitchPos;
  using switchboard::WiringSet;
  return timed("3", "truth-table reproduction and single-observation ambiguity",
               [](Tally& t) {
    struct Row {
      SwitchPos left, right;
      WiringSet on;
    };
    const Row rows[] = {
        {SwitchPos::Up, SwitchPos::Up, WiringSet::of({Wiring::A, Wiring::C})},
        {SwitchPos::Down, SwitchPos::Down, WiringSet::of({Wiring::A, Wiring::D})},
        {SwitchPos::Up, SwitchPos::Down, WiringSet::of({Wiring::B, Wiring::D})},
        {SwitchPos::Down, SwitchPos::Up, WiringSet::of({Wiring::B, Wiring::C})},
    };
    for (const auto& r : rows) {
      const std::string where = std::string(switchboard::to_string(r.left)) + "/" +
                                std::string(switchboard::to_string(r.right));
      t.check(switchboard::consistent_wirings({r.left, r.right, true}) == r.on,
              "light-on row " + where);
      t.check(switchboard::consistent_wirings({r.left, r.right, false}) ==
                  r.on.complement(),
              "light-off row " + where);
    }
    t.check(switchboard::single_observation_insufficient(),
            "a single observation separated the classes");
    // Two settings of the left switch always separate the classes.
    for (SwitchPos right : switchboard::kAllPositions) {
      for (Wiring w : switchboard::kAllWirings) {
        const auto s0 = switchboard::consistent_wirings(
            {SwitchPos::Up, right, switchboard::light_on(w, SwitchPos::Up, right)});
        const auto s1 = switchboard::consistent_wirings(
            {SwitchPos::Down, right, switchboard::light_on(w, SwitchPos::Down, right)});
        bool uniform = true;
        for (Wiring v : s0.intersect(s1).members()) {
          uniform = uniform && switchboard::is_balanced(v) == switchboard::is_balanced(w);
        }
        t.check(uniform && s0.intersect(s1).contains(w),
                std::string("two observations failed to classify wiring ") +
                    switchboard::letter(w));
      }
    }
  });
}

CheckResult check_alice() {
  return timed("4", "flip-on-lower-terminal inspection and cross-world agreement",
               [](Tally& t) {
    for (Wiring w : switchboard::kAllWirings) {
      const std::string name(1, switchboard::letter(w));
      const auto r = switchboard::alice_inspect(w);
      const bool balanced = switchboard::is_balanced(w);
      t.check((r.verdict == Classification::Balanced) == balanced,
              "verdict wrong for " + name);
      t.check((r.final == switchboard::SwitchPos::Down) ==
                  (switchboard::lower_terminal_count(w) % 2 == 1),
              "final position vs lower-terminal parity for " + name);
      const auto table = switchboard::to_table(w);
      t.check(deutsch::classify_table(table) == r.verdict,
              "table verdict differs for " + name);
      t.check(deutsch::classify_quantum(table).classification == r.verdict,
              "quantum verdict differs for " + name);
      t.check(switchboard::alice_inspect(switchboard::relabel_right(w)).verdict ==
                  r.verdict,
              "verdict not relabel-invariant for " + name);
    }
  });
}

CheckResult check_nwire() {
  return timed("5", "N-wire parity against brute-force XOR (runs up to 6 cables)",
               [](Tally& t) {
    for (std::size_t k = 1; k <= kMaxCableRun; ++k) {
      const std::uint64_t runs = std::uint64_t{1} << (2 * k);
      for (std::uint64_t code = 0; code < runs; ++code) {
        std::vector<Wiring> cables(k);
        for (std::size_t i = 0; i < k; ++i) {
          cables[i] = static_cast<Wiring>((code >> (2 * i)) & 3U);
        }
        const switchboard::CableRun run(cables);
        const auto r = switchboard::nwire_inspect(run);
        unsigned x = 0;
        for (std::uint8_t b : run.terminal_bits()) x ^= b;
        const auto expect = x ? switchboard::Parity::Odd : switchboard::Parity::Even;
        t.check(r.parity == expect &&
                    (r.final == switchboard::SwitchPos::Down) == (x == 1U),
                "cable run code " + std::to_string(code) + " of length " +
                    std::to_string(k));
      }
    }
  });
}

CheckResult check_parity(const Options& opts) {
  return timed("6", "flip-count and table parity laws", [&](Tally& t) {
    for (Wiring w : switchboard::kAllWirings) {
      t.check((switchboard::flip_count(w) % 2 == 0) == switchboard::is_balanced(w),
              std::string("flip-count parity law for ") + switchboard::letter(w));
    }
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      auto tables = deutsch::enumerate_all_tables(n, opts.enumeration_cap);
      for (auto& f : promise_tables(n, opts.enumeration_cap)) tables.push_back(f);
      for_tables(t, tables, [](Tally& local, const FunctionTable& f) {
        const bool odd = f.count_ones() % 2 == 1;
        local.check((switchboard::table_parity(f) == switchboard::Parity::Odd) == odd,
                    table_msg(f, "parity differs from bit count mod 2"));
      });
    }
  });
}

CheckResult check_interferometer() {
  return timed("7", "Mach-Zehnder closed form and detector agreement", [](Tally& t) {
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < kPhaseGridPoints; ++i) {
      for (std::size_t j = 0; j < kPhaseGridPoints; ++j) {
        const double a = two_pi * static_cast<double>(i) / kPhaseGridPoints;
        const double b = two_pi * static_cast<double>(j) / kPhaseGridPoints;
        const auto got = interferometer::mz_intensities({a, b, 0});
        const double c = std::cos((a - b) / 2.0);
        const double s = std::sin((a - b) / 2.0);
        t.check(std::abs(got.port0 - c * c) < qsim::kAlgebraTolerance &&
                    std::abs(got.port1 - s * s) < qsim::kAlgebraTolerance,
                "closed form mismatch at grid point");
        t.check(std::abs(got.port0 + got.port1 - 1.0) < qsim::kAlgebraTolerance,
                "intensity not conserved");
        const auto shifted = interferometer::mz_intensities({a + 1.3, b + 1.3, 0});
        t.check(std::abs(shifted.port0 - got.port0) < qsim::kAlgebraTolerance,
                "global phase changed intensities");
        const auto other = interferometer::mz_intensities({a, b, 1});
        t.check(std::abs(other.port0 + other.port1 - 1.0) < qsim::kAlgebraTolerance,
                "intensity not conserved on port 1 input");
      }
    }
    for (const auto& f : promise_tables(1, 1)) {
      const auto det = interferometer::mz_intensities(interferometer::deutsch_phases(f));
      const bool detector0 = det.port0 > 0.5;
      const auto verdict = deutsch::classify_quantum(f).classification;
      t.check(detector0 == (verdict == Classification::Constant),
              table_msg(f, "interferometer detector disagrees with quantum verdict"));
      t.check(std::max(det.port0, det.port1) > 1.0 - qsim::kCircuitTolerance,
              table_msg(f, "detector not certain"));
    }
  });
}

CheckResult check_oracle_algebra(const Options& opts) {
  return timed("8", "oracle is an involutive permutation", [&](Tally& t) {
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      for_tables(t, promise_tables(n, opts.enumeration_cap),
                 [](Tally& local, const FunctionTable& f) {
        const auto u = deutsch::oracle_unitary(f);
        const std::size_t d = u.dim();
        bool perm = true;
        for (std::size_t r = 0; r < d && perm; ++r) {
          std::size_t row_ones = 0, col_ones = 0;
          for (std::size_t c = 0; c < d; ++c) {
            const Complex rv = u(r, c), cv = u(c, r);
            if (rv == Complex{1.0, 0.0}) ++row_ones;
            else if (rv != Complex{}) perm = false;
            if (cv == Complex{1.0, 0.0}) ++col_ones;
          }
          perm = perm && row_ones == 1 && col_ones == 1;
        }
        local.check(perm, table_msg(f, "oracle is not a permutation matrix"));
        local.check((u * u).max_distance(qsim::Unitary::identity(d)) <
                        qsim::kAlgebraTolerance,
                    table_msg(f, "oracle does not square to identity"));
        for (std::uint64_t i = 0; i < d; ++i) {
          const qsim::BasisIndex b(i, f.input_bits() + 1);
          local.check(deutsch::reverse_oracle_roundtrip(f, b) == b,
                      table_msg(f, "roundtrip moved basis " + std::to_string(i)));
        }
      });
    }
  });
}

CheckResult check_relabel(const Options& opts) {
  return timed("9", "relabel symmetry of every verdict", [&](Tally& t) {
    for (Wiring w : switchboard::kAllWirings) {
      const Wiring r = switchboard::relabel_right(w);
      t.check(switchboard::is_balanced(r) == switchboard::is_balanced(w) &&
                  switchboard::relabel_right(r) == w,
              std::string("relabel broke wiring ") + switchboard::letter(w));
    }
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      for_tables(t, promise_tables(n, opts.enumeration_cap),
                 [](Tally& local, const FunctionTable& f) {
        const FunctionTable g = f.complemented();
        local.check(deutsch::classify_table(g) == deutsch::classify_table(f),
                    table_msg(f, "table verdict changed under complement"));
        local.check(deutsch::classify_quantum(g).classification ==
                        deutsch::classify_quantum(f).classification,
                    table_msg(f, "quantum verdict changed under complement"));
        deutsch::BlackBox bf(f), bg(g);
        const auto cf = deutsch::classify_classical(bf);
        const auto cg = deutsch::classify_classical(bg);
        local.check(cf.classification == cg.classification &&
                        cf.log.queries() == cg.log.queries(),
                    table_msg(f, "classical run changed under complement"));
      });
    }
  });
}

}  // namespace

void validate(const Options& opts) {
  if (opts.enumeration_cap < 1 || opts.enumeration_cap > kMaxEnumerationCap) {
    throw SizeError("verify: enumeration cap must be in [1, " +
                    std::to_string(kMaxEnumerationCap) + "]");
  }
  if (opts.max_n < 1 || opts.max_n > opts.enumeration_cap) {
    throw SizeError("verify: max-n " + std::to_string(opts.max_n) +
                    " outside [1, " + std::to_string(opts.enumeration_cap) + "]");
  }
}

std::vector<CheckResult> run_all(const Options& opts) {
  validate(opts);
  std::vector<CheckResult> out;
  out.push_back(check_qsim_kernels());
  out.push_back(check_one_vs_two());
  out.push_back(check_exhaustive(opts));
  out.push_back(check_truth_table());
  out.push_back(check_alice());
  out.push_back(check_nwire());
  out.push_back(check_parity(opts));
  out.push_back(check_interferometer());
  out.push_back(check_oracle_algebra(opts));
  out.push_back(check_relabel(opts));
  return out;
}

}  // namespace djsim::verify
