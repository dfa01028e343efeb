#include "djsim/qsim_reference.hpp"

#include "djsim/errors.hpp"

namespace djsim::qsim::reference {

namespace {

// Local gate index of register index i: bit (k-1-j) is the bit at positions[j].
std::size_t local_index(std::uint64_t i, const std::vector<unsigned>& positions) {
  std::size_t s = 0;
  for (unsigned p : positions) s = (s << 1) | ((i >> p) & 1U);
  return s;
}

}  // namespace

StateVector apply(const StateVector& state, const Unitary& gate,
                  std::span<const std::size_t> targets) {
  const std::vector<unsigned> positions =
      qsim::detail::check_targets(state, gate, targets);
  std::uint64_t target_mask = 0;
  for (unsigned p : positions) target_mask |= std::uint64_t{1} << p;

  const std::size_t dim = state.dimension();
  std::vector<Complex> out(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    Complex acc = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
      if ((i & ~target_mask) != (j & ~target_mask)) continue;
      acc += gate(local_index(i, positions), local_index(j, positions)) *
             state[j];
    }
    out[i] = acc;
  }
  return {qsim::detail::Unchecked{}, state.num_qubits(), std::move(out)};
}

StateVector apply_all(const StateVector& state, const Unitary& gate) {
  if (gate.dim() != 2) {
    throw DimensionError("apply_all needs a single-qubit gate");
  }
  Unitary full = gate;
  for (std::size_t q = 1; q < state.num_qubits(); ++q) full = kron(full, gate);

  const std::size_t dim = state.dimension();
  std::vector<Complex> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) acc += full(r, c) * state[c];
    out[r] = acc;
  }
  return {qsim::detail::Unchecked{}, state.num_qubits(), std::move(out)};
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p;
  p.reserve(state.dimension());
  for (const Complex& a : state.amplitudes()) {
    p.push_back(a.real() * a.real() + a.imag() * a.imag());
  }
  return p;
}

double marginal_probability(const StateVector& state,
                            std::span<const std::size_t> qubits,
                            std::span<const std::uint8_t> outcome) {
  qsim::detail::check_outcome(state, qubits, outcome);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const BasisIndex idx(i, state.num_qubits());
    bool match = true;
    for (std::size_t q = 0; q < qubits.size() && match; ++q) {
      match = idx.bit(qubits[q]) == outcome[q];
    }
    if (match) sum += std::norm(state[i]);
  }
  return sum;
}

}  // namespace djsim::qsim::reference
