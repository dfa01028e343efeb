#pragma once

// Mach-Zehnder interferometer as the one-qubit circuit H . diag(e^{i a},
// e^{i b}) . H: the first beam splitter, one phase shifter per arm, and the
// recombining splitter. Beam splitters use the Hadamard convention so the
// network is the n = 1 query circuit with the oracle replaced by phases.

#include <vector>

#include "djsim/deutsch.hpp"
#include "djsim/qsim.hpp"

namespace djsim::interferometer {

struct MzNetwork {
  double phase_upper = 0.0;  // radians
  double phase_lower = 0.0;  // radians
  unsigned input_port = 0;   // 0 or 1
};

struct Intensities {
  double port0;
  double port1;
};

/// diag(1, e^{i phi}). Throws NumericError for non-finite phi.
qsim::Unitary phase_shifter(double phi);

/// diag(e^{i upper}, e^{i lower}) for the two arms.
qsim::Unitary arm_phases(double upper, double lower);

Intensities mz_intensities(const MzNetwork& net);

/// Phase pi * f(x) on arm x, input port 0. Constant tables fire detector 0,
/// balanced tables detector 1.
MzNetwork deutsch_phases(const deutsch::FunctionTable& f);

/// Phase-drift sensitivity row: target phase difference and the worst change
/// of the dominant detector's intensity over target -/+ epsilon.
struct SweepPoint {
  double target;
  double worst_error;
};

std::vector<SweepPoint> phase_error_sweep(const std::vector<double>& targets,
                                          double epsilon);

/// Reduces an angle into [0, 2 pi) for display.
double wrap_phase(double phi);

}  // namespace djsim::interferometer
