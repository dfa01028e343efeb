#pragma once

// Constant-vs-balanced promise problem over f: {0,1}^n -> {0,1}.
//
// Two solvers share one FunctionTable: the one-query quantum circuit built on
// qsim, and a deterministic classical prober that sees f only through a
// query-counting BlackBox.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "djsim/qsim.hpp"

namespace djsim::deutsch {

/// Largest input width a FunctionTable may carry.
inline constexpr std::size_t kMaxInputBits = 20;
/// Largest n for Balanced/Neither enumeration (C(16, 8) = 12870 tables).
inline constexpr std::size_t kDefaultEnumerationCap = 4;

enum class Classification { Constant, Balanced, Neither };

std::string_view to_string(Classification c);

/// Truth table of f; entry x is f(x) with x read as an n-bit big-endian
/// integer.
class FunctionTable {
 public:
  FunctionTable(std::size_t input_bits, std::vector<std::uint8_t> values);

  /// Parses the oracle text format: 2^n characters over {0,1}, surrounding
  /// whitespace (including one trailing newline) ignored.
  static FunctionTable parse(std::string_view text);

  std::size_t input_bits() const noexcept { return input_bits_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::uint8_t operator()(std::uint64_t x) const { return values_.at(x); }

  std::size_t count_ones() const;
  /// Table of 1 - f.
  FunctionTable complemented() const;
  /// Oracle text, e.g. "0110".
  std::string to_string() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  std::size_t input_bits_;
  std::vector<std::uint8_t> values_;
};

/// One oracle evaluation. Classical queries carry the probed input and the
/// observed bit; a quantum query acts on a superposed input and yields no
/// classical output, so both fields are empty.
struct QueryRecord {
  std::optional<std::uint64_t> input;
  std::optional<std::uint8_t> output;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

class QueryLog {
 public:
  void record(QueryRecord q) { transcript_.push_back(q); }
  std::size_t queries() const noexcept { return transcript_.size(); }
  std::span<const QueryRecord> transcript() const noexcept { return transcript_; }

 private:
  std::vector<QueryRecord> transcript_;
};

/// Query access to a hidden table. Every evaluation is logged. Not safe to
/// share between concurrent classifications.
class BlackBox {
 public:
  explicit BlackBox(FunctionTable hidden) : hidden_(std::move(hidden)) {}

  std::size_t input_bits() const noexcept { return hidden_.input_bits(); }
  std::uint8_t evaluate(std::uint64_t x);
  const QueryLog& log() const noexcept { return log_; }

 private:
  FunctionTable hidden_;
  QueryLog log_;
};

Classification classify_table(const FunctionTable& f);

/// Permutation unitary |x>|y> -> |x>|y xor f(x)> on n + 1 qubits.
qsim::Unitary oracle_unitary(const FunctionTable& f);

/// Register state after the full query circuit: X on the target, Hadamard on
/// every qubit, one oracle application, Hadamard on the input register.
qsim::StateVector circuit_state(const FunctionTable& f);

struct QuantumResult {
  Classification classification;
  QueryLog log;
  /// Probability mass supporting the verdict; 1 up to rounding.
  double certainty;
};

/// One oracle application between Hadamard layers; reads the input register
/// all-zero probability. Throws PromiseViolation for Neither tables.
QuantumResult classify_quantum(const FunctionTable& f);

struct ClassicalResult {
  Classification classification;
  QueryLog log;
};

struct ClassicalOptions {
  /// After deciding, keep probing every remaining input and throw
  /// PromiseViolation if the full table contradicts the verdict. Audit
  /// probes are logged too.
  bool audit = false;
};

/// Probes inputs 0, 1, 2, ... and stops at the first differing pair
/// (Balanced) or after 2^(n-1) + 1 identical outputs (Constant).
ClassicalResult classify_classical(BlackBox& box, ClassicalOptions opts = {});

/// Exactly 2 tables for Constant; C(2^n, 2^(n-1)) for Balanced; everything
/// else for Neither. Tables come out in ascending order of their oracle
/// strings. Balanced and Neither require n <= cap.
std::vector<FunctionTable> enumerate_functions(
    std::size_t n, Classification which,
    std::size_t cap = kDefaultEnumerationCap);

/// All 2^(2^n) tables, ascending. n <= cap.
std::vector<FunctionTable> enumerate_all_tables(
    std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Applies the oracle twice to a basis state and reads back the basis index.
qsim::BasisIndex reverse_oracle_roundtrip(const FunctionTable& f,
                                          const qsim::BasisIndex& basis);

}  // namespace djsim::deutsch
