#pragma once

// Serial reference kernels. Each one follows the textbook definition directly
// (full Kronecker expansion, per-index sums) and is O(4^n) where the parallel
// kernel is O(2^n). They exist to cross-check qsim.hpp and to give the
// benchmark a baseline; do not use them on large registers.

#include "djsim/qsim.hpp"

namespace djsim::qsim::reference {

/// out[i] = sum_j U(sub(i), sub(j)) * in[j] over all j that agree with i off
/// the target qubits.
StateVector apply(const StateVector& state, const Unitary& gate,
                  std::span<const std::size_t> targets);

/// Builds gate (x) gate (x) ... (x) gate explicitly and multiplies.
StateVector apply_all(const StateVector& state, const Unitary& gate);

std::vector<double> probabilities(const StateVector& state);

double marginal_probability(const StateVector& state,
                            std::span<const std::size_t> qubits,
                            std::span<const std::uint8_t> outcome);

}  // namespace djsim::qsim::reference
