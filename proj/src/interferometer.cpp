#include "djsim/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "djsim/errors.hpp"

namespace djsim::interferometer {

namespace {

void require_finite(double phi, const char* what) {
  if (!std::isfinite(phi)) {
    throw NumericError(std::string(what) + ": phase must be finite");
  }
}

}  // namespace

qsim::Unitary phase_shifter(double phi) {
  require_finite(phi, "phase_shifter");
  return {qsim::detail::Unchecked{}, 2,
          {1.0, 0.0, 0.0, std::polar(1.0, phi)}};
}

qsim::Unitary arm_phases(double upper, double lower) {
  require_finite(upper, "arm_phases");
  require_finite(lower, "arm_phases");
  return {qsim::detail::Unchecked{}, 2,
          {std::polar(1.0, upper), 0.0, 0.0, std::polar(1.0, lower)}};
}

Intensities mz_intensities(const MzNetwork& net) {
  if (net.input_port > 1) throw RangeError("interferometer: input port must be 0 or 1");
  const qsim::Unitary splitter = qsim::hadamard();
  qsim::StateVector s =
      qsim::StateVector::basis(qsim::BasisIndex(net.input_port, 1));
  s = qsim::apply(s, splitter, {0});
  s = qsim::apply(s, arm_phases(net.phase_upper, net.phase_lower), {0});
  s = qsim::apply(s, splitter, {0});
  const std::vector<double> p = qsim::probabilities(s);
  return {p[0], p[1]};
}

MzNetwork deutsch_phases(const deutsch::FunctionTable& f) {
  if (f.input_bits() != 1) {
    throw SizeError("deutsch_phases: the interferometer encodes one-bit tables only");
  }
  if (deutsch::classify_table(f) == deutsch::Classification::Neither) {
    throw PromiseViolation("deutsch_phases: table is neither constant nor balanced");
  }
  return {std::numbers::pi * f(0), std::numbers::pi * f(1), 0};
}

std::vector<SweepPoint> phase_error_sweep(const std::vector<double>& targets,
                                          double epsilon) {
  require_finite(epsilon, "phase_error_sweep");
  if (epsilon < 0.0) throw NumericError("phase_error_sweep: epsilon must be >= 0");

  std::vector<SweepPoint> out;
  out.reserve(targets.size());
  for (double delta : targets) {
    require_finite(delta, "phase_error_sweep");
    const Intensities nominal = mz_intensities({delta, 0.0, 0});
    // Ties go to detector 0.
    const bool port0_dominant = nominal.port0 >= nominal.port1;
    const double base = port0_dominant ? nominal.port0 : nominal.port1;
    double worst = 0.0;
    for (double shifted : {delta - epsilon, delta + epsilon}) {
      const Intensities i = mz_intensities({shifted, 0.0, 0});
      worst = std::max(worst, std::abs((port0_dominant ? i.port0 : i.port1) - base));
    }
    out.push_back({delta, worst});
  }
  return out;
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

}  // namespace djsim::interferometer
