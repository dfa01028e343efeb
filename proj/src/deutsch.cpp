#include "djsim/deutsch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "djsim/errors.hpp"

namespace djsim::deutsch {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Constant:
      return "Constant";
    case Classification::Balanced:
      return "Balanced";
    case Classification::Neither:
      return "Neither";
  }
  return "?";
}

// ---- FunctionTable --------------------------------------------------------

FunctionTable::FunctionTable(std::size_t input_bits,
                             std::vector<std::uint8_t> values)
    : input_bits_(input_bits), values_(std::move(values)) {
  if (input_bits_ < 1 || input_bits_ > kMaxInputBits) {
    throw SizeError("function table: input width " +
                    std::to_string(input_bits_) + " outside [1, " +
                    std::to_string(kMaxInputBits) + "]");
  }
  if (values_.size() != (std::size_t{1} << input_bits_)) {
    throw SizeError("function table: " + std::to_string(values_.size()) +
                    " values for " + std::to_string(input_bits_) +
                    " input bits");
  }
  for (std::uint8_t v : values_) {
    if (v > 1) throw ParseError("function table: values must be 0 or 1");
  }
}

FunctionTable FunctionTable::parse(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) {
    throw ParseError("oracle: empty bit string");
  }
  text = text.substr(first, text.find_last_not_of(kSpace) - first + 1);

  std::vector<std::uint8_t> values;
  values.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      std::ostringstream msg;
      msg << "oracle: invalid character '" << ch << "' at position " << i
          << " (expected '0' or '1')";
      throw ParseError(msg.str());
    }
    values.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  const std::size_t len = values.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw SizeError("oracle: length " + std::to_string(len) +
                    " is not a power of two >= 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  return {n, std::move(values)};
}

std::size_t FunctionTable::count_ones() const {
  return static_cast<std::size_t>(
      std::count(values_.begin(), values_.end(), std::uint8_t{1}));
}

FunctionTable FunctionTable::complemented() const {
  std::vector<std::uint8_t> flipped(values_.size());
  std::transform(values_.begin(), values_.end(), flipped.begin(),
                 [](std::uint8_t v) { return static_cast<std::uint8_t>(1 - v); });
  return {input_bits_, std::move(flipped)};
}

std::string FunctionTable::to_string() const {
  std::string s;
  s.reserve(values_.size());
  for (std::uint8_t v : values_) s.push_back(v ? '1' : '0');
  return s;
}

std::uint8_t BlackBox::evaluate(std::uint64_t x) {
  if (x >= hidden_.size()) {
    throw RangeError("black box: input " + std::to_string(x) + " out of range");
  }
  const std::uint8_t y = hidden_(x);
  log_.record({x, y});
  return y;
}

// ---- classification -------------------------------------------------------

Classification classify_table(const FunctionTable& f) {
  const std::size_t ones = f.count_ones();
  if (ones == 0 || ones == f.size()) return Classification::Constant;
  if (2 * ones == f.size()) return Classification::Balanced;
  return Classification::Neither;
}

qsim::Unitary oracle_unitary(const FunctionTable& f) {
  const std::size_t qubits = f.input_bits() + 1;
  if (qubits > qsim::kMaxGateQubits) {
    throw SizeError("oracle: " + std::to_string(qubits) +
                    " qubits exceeds dense unitary cap of " +
                    std::to_string(qsim::kMaxGateQubits));
  }
  const std::size_t dim = std::size_t{1} << qubits;
  std::vector<qsim::Complex> e(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t x = col >> 1;
    const std::size_t row = col ^ f(x);
    e[row * dim + col] = 1.0;
  }
  return {qsim::detail::Unchecked{}, dim, std::move(e)};
}

qsim::StateVector circuit_state(const FunctionTable& f) {
  const std::size_t n = f.input_bits();
  const std::size_t qubits = n + 1;

  qsim::StateVector state = qsim::zero_state(qubits);
  state = qsim::apply(state, qsim::pauli_x(), {n});
  state = qsim::apply_all(state, qsim::hadamard());

  std::vector<std::size_t> all(qubits);
  std::iota(all.begin(), all.end(), std::size_t{0});
  state = qsim::apply(state, oracle_unitary(f), all);

  const qsim::Unitary h = qsim::hadamard();
  for (std::size_t q = 0; q < n; ++q) state = qsim::apply(state, h, {q});
  return state;
}

QuantumResult classify_quantum(const FunctionTable& f) {
  if (classify_table(f) == Classification::Neither) {
    throw PromiseViolation("table " + f.to_string() +
                           " is neither constant nor balanced");
  }
  const std::size_t n = f.input_bits();
  const qsim::StateVector state = circuit_state(f);
  QueryLog log;
  log.record({});

  std::vector<std::size_t> input_register(n);
  std::iota(input_register.begin(), input_register.end(), std::size_t{0});
  const std::vector<std::uint8_t> zeros(n, 0);
  const double p_zero =
      qsim::marginal_probability(state, input_register, zeros);

  if (std::abs(p_zero - 1.0) <= qsim::kCircuitTolerance) {
    return {Classification::Constant, std::move(log), p_zero};
  }
  if (std::abs(p_zero) <= qsim::kCircuitTolerance) {
    return {Classification::Balanced, std::move(log), 1.0 - p_zero};
  }
  std::ostringstream msg;
  msg << "quantum classifier: all-zero probability " << p_zero
      << " is neither 0 nor 1";
  throw NumericError(msg.str());
}

ClassicalResult classify_classical(BlackBox& box, ClassicalOptions opts) {
  const std::uint64_t size = std::uint64_t{1} << box.input_bits();
  const std::uint64_t enough = size / 2 + 1;

  std::vector<std::uint8_t> seen;
  seen.reserve(size);
  seen.push_back(box.evaluate(0));
  Classification verdict = Classification::Constant;
  for (std::uint64_t x = 1; x < enough; ++x) {
    seen.push_back(box.evaluate(x));
    if (seen.back() != seen.front()) {
      verdict = Classification::Balanced;
      break;
    }
  }

  if (opts.audit) {
    for (std::uint64_t x = seen.size(); x < size; ++x) {
      seen.push_back(box.evaluate(x));
    }
    const FunctionTable observed(box.input_bits(), seen);
    if (classify_table(observed) != verdict) {
      throw PromiseViolation("classical audit: table " + observed.to_string() +
                             " contradicts verdict " +
                             std::string(to_string(verdict)));
    }
  }
  return {verdict, box.log()};
}

// ---- enumeration ----------------------------------------------------------

namespace {

void check_enumeration_width(std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap) {
    throw SizeError("enumeration: n = " + std::to_string(n) +
                    " outside [1, " + std::to_string(cap) + "]");
  }
  if (cap > 4) {
    // 2^(2^5) tables would not fit the 64-bit mask walk below.
    throw SizeError("enumeration cap may not exceed 4");
  }
}

// Table whose oracle string, read as a binary number, equals mask.
FunctionTable table_from_mask(std::size_t n, std::uint64_t mask) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<std::uint8_t> v(len);
  for (std::size_t x = 0; x < len; ++x) {
    v[x] = static_cast<std::uint8_t>((mask >> (len - 1 - x)) & 1U);
  }
  return {n, std::move(v)};
}

}  // namespace

std::vector<FunctionTable> enumerate_all_tables(std::size_t n, std::size_t cap) {
  check_enumeration_width(n, cap);
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
  std::vector<FunctionTable> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(table_from_mask(n, m));
  return out;
}

std::vector<FunctionTable> enumerate_functions(std::size_t n,
                                               Classification which,
                                               std::size_t cap) {
  if (which == Classification::Constant) {
    if (n < 1 || n > kMaxInputBits) {
      throw SizeError("enumeration: n = " + std::to_string(n) + " out of range");
    }
    const std::size_t len = std::size_t{1} << n;
    return {FunctionTable(n, std::vector<std::uint8_t>(len, 0)),
            FunctionTable(n, std::vector<std::uint8_t>(len, 1))};
  }
  std::vector<FunctionTable> all = enumerate_all_tables(n, cap);
  std::vector<FunctionTable> out;
  for (auto& t : all) {
    if (classify_table(t) == which) out.push_back(std::move(t));
  }
  return out;
}

qsim::BasisIndex reverse_oracle_roundtrip(const FunctionTable& f,
                                          const qsim::BasisIndex& basis) {
  const std::size_t qubits = f.input_bits() + 1;
  if (basis.num_qubits() != qubits) {
    throw DimensionError("roundtrip: basis index has " +
                         std::to_string(basis.num_qubits()) +
                         " qubits, oracle acts on " + std::to_string(qubits));
  }
  const qsim::Unitary u = oracle_unitary(f);
  std::vector<std::size_t> all(qubits);
  std::iota(all.begin(), all.end(), std::size_t{0});

  qsim::StateVector s = qsim::StateVector::basis(basis);
  s = qsim::apply(s, u, all);
  s = qsim::apply(s, u, all);

  const auto amps = s.amplitudes();
  const auto it = std::max_element(
      amps.begin(), amps.end(),
      [](const qsim::Complex& a, const qsim::Complex& b) {
        return std::norm(a) < std::norm(b);
      });
  if (std::abs(std::norm(*it) - 1.0) > qsim::kAlgebraTolerance) {
    throw NumericError("roundtrip: result is not a basis state");
  }
  return {static_cast<std::uint64_t>(it - amps.begin()), qubits};
}

}  // namespace djsim::deutsch
