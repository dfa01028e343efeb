#pragma once

// Dense state-vector simulation of small qubit registers.
//
// Basis convention: qubit 0 is the most significant bit of a basis index, so
// the index of |x>|y> prints as the ket string "xy". For an n-qubit register
// qubit q lives at bit position (n - 1 - q).
//
// The kernels in this header are OpenMP-parallel over amplitude groups. The
// definitional serial versions live in qsim_reference.hpp and are kept for
// testing and benchmarking.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace djsim::qsim {

using Complex = std::complex<double>;

/// Tolerance for kernel-level algebraic identities (norms, involutions).
inline constexpr double kAlgebraTolerance = 1e-12;
/// Tolerance for end-to-end circuit outcomes.
inline constexpr double kCircuitTolerance = 1e-9;

/// Default register cap for zero_state.
inline constexpr std::size_t kDefaultQubitCap = 20;
/// Hard ceiling on any register; the cap argument may not exceed it.
inline constexpr std::size_t kMaxQubitCap = 26;
/// Dense unitaries are stored as dim x dim matrices; beyond this they are
/// rejected rather than allocated.
inline constexpr std::size_t kMaxGateQubits = 10;

namespace detail {
struct Unchecked {
  explicit Unchecked() = default;
};
}  // namespace detail

/// Computational-basis label of an n-qubit register.
class BasisIndex {
 public:
  BasisIndex(std::uint64_t value, std::size_t num_qubits);

  std::uint64_t value() const noexcept { return value_; }
  std::size_t num_qubits() const noexcept { return num_qubits_; }

  /// Bit carried by qubit q (qubit 0 is the most significant bit).
  unsigned bit(std::size_t qubit) const;

  /// Ket string, e.g. "10" for |1>|0>.
  std::string label() const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

 private:
  std::uint64_t value_;
  std::size_t num_qubits_;
};

class StateVector {
 public:
  /// Validates length (a power of two, at least 2) and unit norm.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);
  static StateVector basis(const BasisIndex& index);

  /// Trusted construction for kernels whose output is normalized by
  /// construction. Only the length is checked.
  StateVector(detail::Unchecked, std::size_t num_qubits,
              std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  /// Largest entrywise distance to another state of the same size.
  double max_distance(const StateVector& other) const;

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Square matrix acting on a power-of-two dimensional space, row-major.
class Unitary {
 public:
  /// Validates dimension and U^dagger U = I within kAlgebraTolerance.
  static Unitary from_matrix(std::size_t dim, std::vector<Complex> entries);
  static Unitary identity(std::size_t dim);

  Unitary(detail::Unchecked, std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_qubits() const noexcept;
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Unitary adjoint() const;
  /// Deviation of U^dagger U from the identity, max over entries.
  double unitarity_error() const;
  bool is_unitary(double tolerance = kAlgebraTolerance) const {
    return unitarity_error() <= tolerance;
  }
  double max_distance(const Unitary& other) const;

  /// Matrix product (*this) * rhs, i.e. rhs acts first.
  friend Unitary operator*(const Unitary& lhs, const Unitary& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Kronecker product; lhs acts on the more significant qubits.
Unitary kron(const Unitary& lhs, const Unitary& rhs);

Unitary hadamard();
Unitary pauli_x();

/// |0...0> on num_qubits qubits. Throws SizeError outside [1, cap].
StateVector zero_state(std::size_t num_qubits,
                       std::size_t cap = kDefaultQubitCap);

/// Applies gate to the ordered target qubits; targets[0] is the most
/// significant bit of the gate's local index.
StateVector apply(const StateVector& state, const Unitary& gate,
                  std::span<const std::size_t> targets);
StateVector apply(const StateVector& state, const Unitary& gate,
                  std::initializer_list<std::size_t> targets);

/// Applies a single-qubit gate to every qubit in turn.
StateVector apply_all(const StateVector& state, const Unitary& gate);

std::vector<double> probabilities(const StateVector& state);

/// Probability that the listed qubits read the given bits. An empty qubit
/// list is the vacuous event and returns 1.
double marginal_probability(const StateVector& state,
                            std::span<const std::size_t> qubits,
                            std::span<const std::uint8_t> outcome);

/// Draws basis-index samples from the exact distribution. Demonstration
/// only; every caller supplies the seed.
std::vector<std::uint64_t> sample(const StateVector& state, std::size_t shots,
                                  std::uint64_t seed);

namespace detail {
/// Shared argument validation for apply; returns bit positions of targets.
std::vector<unsigned> check_targets(const StateVector& state,
                                    const Unitary& gate,
                                    std::span<const std::size_t> targets);
void check_outcome(const StateVector& state,
                   std::span<const std::size_t> qubits,
                   std::span<const std::uint8_t> outcome);
}  // namespace detail

}  // namespace djsim::qsim
