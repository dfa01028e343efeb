#include "djsim/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "djsim/errors.hpp"
#include "omp_util.hpp"

namespace djsim::qsim {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  return static_cast<std::size_t>(std::countr_zero(n));
}

// Spreads the bits of g around the zeroed (ascending) bit positions.
std::uint64_t insert_zero_bits(std::uint64_t g,
                               std::span<const unsigned> ascending) {
  for (unsigned p : ascending) {
    const std::uint64_t low = g & ((std::uint64_t{1} << p) - 1);
    g = ((g >> p) << (p + 1)) | low;
  }
  return g;
}

}  // namespace

// ---- BasisIndex -----------------------------------------------------------

BasisIndex::BasisIndex(std::uint64_t value, std::size_t num_qubits)
    : value_(value), num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubitCap) {
    throw SizeError("basis index: register size " + std::to_string(num_qubits) +
                    " outside [1, " + std::to_string(kMaxQubitCap) + "]");
  }
  if (value >= (std::uint64_t{1} << num_qubits)) {
    throw RangeError("basis index " + std::to_string(value) +
                     " out of range for " + std::to_string(num_qubits) +
                     " qubits");
  }
}

unsigned BasisIndex::bit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw RangeError("qubit " + std::to_string(qubit) + " out of range");
  }
  return static_cast<unsigned>((value_ >> (num_qubits_ - 1 - qubit)) & 1U);
}

std::string BasisIndex::label() const {
  std::string out(num_qubits_, '0');
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    if (bit(q)) out[q] = '1';
  }
  return out;
}

// ---- StateVector ----------------------------------------------------------

StateVector::StateVector(detail::Unchecked, std::size_t num_qubits,
                         std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ == 0 || num_qubits_ > kMaxQubitCap ||
      amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    throw SizeError("state vector: " + std::to_string(amplitudes_.size()) +
                    " amplitudes for " + std::to_string(num_qubits_) +
                    " qubits");
  }
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t len = amplitudes.size();
  if (len < 2 || !is_power_of_two(len)) {
    throw SizeError("state vector length " + std::to_string(len) +
                    " is not a power of two >= 2");
  }
  StateVector s(detail::Unchecked{}, log2_exact(len), std::move(amplitudes));
  const double err = std::abs(s.norm_squared() - 1.0);
  if (!(err <= kAlgebraTolerance)) {
    std::ostringstream msg;
    msg << "state vector is not normalized (|norm^2 - 1| = " << err << ")";
    throw NumericError(msg.str());
  }
  return s;
}

StateVector StateVector::basis(const BasisIndex& index) {
  std::vector<Complex> amps(std::size_t{1} << index.num_qubits());
  amps[index.value()] = 1.0;
  return {detail::Unchecked{}, index.num_qubits(), std::move(amps)};
}

double StateVector::norm_squared() const {
  const auto n = static_cast<std::int64_t>(amplitudes_.size());
  const Complex* a = amplitudes_.data();
  double sum = 0.0;
  DJSIM_OMP(parallel for reduction(+ : sum) if (n >= djsim::detail::kParallelGrain))
  for (std::int64_t i = 0; i < n; ++i) sum += std::norm(a[i]);
  return sum;
}

double StateVector::max_distance(const StateVector& other) const {
  if (other.dimension() != dimension()) {
    throw DimensionError("state size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
  }
  return worst;
}

// ---- Unitary --------------------------------------------------------------

Unitary::Unitary(detail::Unchecked, std::size_t dim,
                 std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 2 || !is_power_of_two(dim_) ||
      log2_exact(dim_) > kMaxGateQubits) {
    throw SizeError("unitary dimension " + std::to_string(dim_) +
                    " must be a power of two in [2, 2^" +
                    std::to_string(kMaxGateQubits) + "]");
  }
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("unitary: expected " + std::to_string(dim_ * dim_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

Unitary Unitary::from_matrix(std::size_t dim, std::vector<Complex> entries) {
  Unitary u(detail::Unchecked{}, dim, std::move(entries));
  const double err = u.unitarity_error();
  if (!(err <= kAlgebraTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (max |U^dagger U - I| = " << err << ")";
    throw NumericError(msg.str());
  }
  return u;
}

Unitary Unitary::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return {detail::Unchecked{}, dim, std::move(e)};
}

std::size_t Unitary::num_qubits() const noexcept { return log2_exact(dim_); }

Unitary Unitary::adjoint() const {
  std::vector<Complex> e(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
    }
  }
  return {detail::Unchecked{}, dim_, std::move(e)};
}

double Unitary::unitarity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) {
        sum += std::conj(entries_[k * dim_ + r]) * entries_[k * dim_ + c];
      }
      if (r == c) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

double Unitary::max_distance(const Unitary& other) const {
  if (other.dim_ != dim_) throw DimensionError("unitary size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

Unitary operator*(const Unitary& lhs, const Unitary& rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimensionError("unitary size mismatch");
  const std::size_t d = lhs.dim_;
  std::vector<Complex> e(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs.entries_[r * d + k];
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < d; ++c) e[r * d + c] += a * rhs.entries_[k * d + c];
    }
  }
  return {detail::Unchecked{}, d, std::move(e)};
}

Unitary kron(const Unitary& lhs, const Unitary& rhs) {
  const std::size_t a = lhs.dim();
  const std::size_t b = rhs.dim();
  const std::size_t d = a * b;
  if (log2_exact(a) + log2_exact(b) > kMaxGateQubits) {
    throw SizeError("kron: result exceeds " + std::to_string(kMaxGateQubits) +
                    " qubits");
  }
  std::vector<Complex> e(d * d);
  for (std::size_t r1 = 0; r1 < a; ++r1)
    for (std::size_t c1 = 0; c1 < a; ++c1)
      for (std::size_t r2 = 0; r2 < b; ++r2)
        for (std::size_t c2 = 0; c2 < b; ++c2)
          e[(r1 * b + r2) * d + (c1 * b + c2)] = lhs(r1, c1) * rhs(r2, c2);
  return {detail::Unchecked{}, d, std::move(e)};
}

Unitary hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {detail::Unchecked{}, 2, {s, s, s, -s}};
}

Unitary pauli_x() { return {detail::Unchecked{}, 2, {0.0, 1.0, 1.0, 0.0}}; }

// ---- kernels --------------------------------------------------------------

StateVector zero_state(std::size_t num_qubits, std::size_t cap) {
  if (cap > kMaxQubitCap) {
    throw SizeError("qubit cap " + std::to_string(cap) + " exceeds hard limit " +
                    std::to_string(kMaxQubitCap));
  }
  if (num_qubits < 1 || num_qubits > cap) {
    throw SizeError("zero_state: " + std::to_string(num_qubits) +
                    " qubits outside [1, " + std::to_string(cap) + "]");
  }
  return StateVector::basis(BasisIndex(0, num_qubits));
}

namespace detail {

std::vector<unsigned> check_targets(const StateVector& state,
                                    const Unitary& gate,
                                    std::span<const std::size_t> targets) {
  const std::size_t n = state.num_qubits();
  if (targets.empty() || gate.dim() != (std::size_t{1} << targets.size())) {
    throw DimensionError("gate of dimension " + std::to_string(gate.dim()) +
                         " cannot act on " + std::to_string(targets.size()) +
                         " target qubit(s)");
  }
  std::vector<unsigned> positions;
  positions.reserve(targets.size());
  for (std::size_t t : targets) {
    if (t >= n) {
      throw RangeError("target qubit " + std::to_string(t) +
                       " out of range for " + std::to_string(n) + " qubits");
    }
    const auto pos = static_cast<unsigned>(n - 1 - t);
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      throw DuplicateTargetError("target qubit " + std::to_string(t) +
                                 " listed more than once");
    }
    positions.push_back(pos);
  }
  return positions;
}

void check_outcome(const StateVector& state,
                   std::span<const std::size_t> qubits,
                   std::span<const std::uint8_t> outcome) {
  if (qubits.size() != outcome.size()) {
    throw DimensionError("marginal: " + std::to_string(qubits.size()) +
                         " qubits but " + std::to_string(outcome.size()) +
                         " outcome bits");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= state.num_qubits()) {
      throw RangeError("marginal: qubit " + std::to_string(qubits[i]) +
                       " out of range");
    }
    if (outcome[i] > 1) throw RangeError("marginal: outcome bits must be 0/1");
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[j] == qubits[i]) {
        throw DuplicateTargetError("marginal: qubit " +
                                   std::to_string(qubits[i]) + " repeated");
      }
    }
  }
}

}  // namespace detail

StateVector apply(const StateVector& state, const Unitary& gate,
                  std::span<const std::size_t> targets) {
  const std::vector<unsigned> positions =
      detail::check_targets(state, gate, targets);
  const std::size_t k = positions.size();
  const std::size_t sub = gate.dim();

  // offsets[s]: register bits set by local gate index s (targets[0] = MSB).
  std::vector<std::uint64_t> offsets(sub, 0);
  for (std::size_t s = 0; s < sub; ++s) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((s >> (k - 1 - j)) & 1U) offsets[s] |= std::uint64_t{1} << positions[j];
    }
  }
  std::vector<unsigned> ascending = positions;
  std::sort(ascending.begin(), ascending.end());

  const auto groups =
      static_cast<std::int64_t>(state.dimension() >> k);
  const Complex* in = state.amplitudes().data();
  std::vector<Complex> out(state.dimension());
  Complex* dst = out.data();
  const Complex* m = gate.entries().data();

  DJSIM_OMP(parallel if (groups >= djsim::detail::kParallelGrain))
  {
    std::vector<Complex> local(sub);
    DJSIM_OMP(for schedule(static))
    for (std::int64_t g = 0; g < groups; ++g) {
      const std::uint64_t base =
          insert_zero_bits(static_cast<std::uint64_t>(g), ascending);
      for (std::size_t s = 0; s < sub; ++s) local[s] = in[base | offsets[s]];
      for (std::size_t r = 0; r < sub; ++r) {
        Complex acc = 0.0;
        const Complex* row = m + r * sub;
        for (std::size_t s = 0; s < sub; ++s) acc += row[s] * local[s];
        dst[base | offsets[r]] = acc;
      }
    }
  }
  return {detail::Unchecked{}, state.num_qubits(), std::move(out)};
}

StateVector apply(const StateVector& state, const Unitary& gate,
                  std::initializer_list<std::size_t> targets) {
  return apply(state, gate, std::span<const std::size_t>(targets.begin(),
                                                         targets.size()));
}

StateVector apply_all(const StateVector& state, const Unitary& gate) {
  if (gate.dim() != 2) {
    throw DimensionError("apply_all needs a single-qubit gate, got dimension " +
                         std::to_string(gate.dim()));
  }
  StateVector current = state;
  for (std::size_t q = 0; q < state.num_qubits(); ++q) {
    current = apply(current, gate, {q});
  }
  return current;
}

std::vector<double> probabilities(const StateVector& state) {
  const auto n = static_cast<std::int64_t>(state.dimension());
  const Complex* a = state.amplitudes().data();
  std::vector<double> p(state.dimension());
  double* dst = p.data();
  DJSIM_OMP(parallel for schedule(static) if (n >= djsim::detail::kParallelGrain))
  for (std::int64_t i = 0; i < n; ++i) dst[i] = std::norm(a[i]);
  return p;
}

double marginal_probability(const StateVector& state,
                            std::span<const std::size_t> qubits,
                            std::span<const std::uint8_t> outcome) {
  detail::check_outcome(state, qubits, outcome);
  std::uint64_t mask = 0;
  std::uint64_t want = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1}
                              << (state.num_qubits() - 1 - qubits[i]);
    mask |= bit;
    if (outcome[i]) want |= bit;
  }
  const auto n = static_cast<std::int64_t>(state.dimension());
  const Complex* a = state.amplitudes().data();
  double sum = 0.0;
  DJSIM_OMP(parallel for reduction(+ : sum) if (n >= djsim::detail::kParallelGrain))
  for (std::int64_t i = 0; i < n; ++i) {
    if ((static_cast<std::uint64_t>(i) & mask) == want) sum += std::norm(a[i]);
  }
  return sum;
}

std::vector<std::uint64_t> sample(const StateVector& state, std::size_t shots,
                                  std::uint64_t seed) {
  const std::vector<double> p = probabilities(state);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> dist(p.begin(), p.end());
  std::vector<std::uint64_t> out(shots);
  for (auto& v : out) v = dist(rng);
  return out;
}

}  // namespace djsim::qsim
