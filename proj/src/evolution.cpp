#include "pbphase/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace pbphase {

OscillatorSpectrum oscillator_spectrum(const SpaceConfig& config, double omega) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw ConfigError("omega must be a positive finite frequency");
  }
  const std::size_t s = config.s();
  const double dim = static_cast<double>(config.dim());
  std::vector<double> e(config.dim());
  for (std::size_t n = 0; n <= s; ++n) {
    const double top = n == s ? dim / 2.0 : 0.0;
    e[n] = omega * (static_cast<double>(n) + 0.5 + top);
  }
  return {config, omega, std::move(e)};
}

OperatorMatrix hamiltonian(const SpaceConfig& config, double omega) {
  const OscillatorSpectrum spec = oscillator_spectrum(config, omega);
  std::vector<Complex> d(spec.energies.begin(), spec.energies.end());
  return with_certified_tag(OperatorMatrix::diagonal(d), Tag::hermitian, 0.0);
}

OperatorMatrix time_evolution(const SpaceConfig& config, double omega, double t) {
  const OscillatorSpectrum spec = oscillator_spectrum(config, omega);
  std::vector<Complex> d(spec.energies.size());
  for (std::size_t n = 0; n < d.size(); ++n) d[n] = std::polar(1.0, -spec.energies[n] * t);
  return with_certified_tag(OperatorMatrix::diagonal(d), Tag::unitary,
                            config.tolerances().op);
}

std::vector<Complex> cycle_phase_per_level(const SpaceConfig& config) {
  const std::size_t s = config.s();
  std::vector<Complex> out(config.dim());
  for (std::size_t n = 0; n <= s; ++n) {
    // 2x is an integer, so only the parity of 2x matters
    const double x = static_cast<double>(n) + 0.5 +
                     (n == s ? static_cast<double>(config.dim()) / 2.0 : 0.0);
    const double frac = x - std::floor(x);
    out[n] = std::polar(1.0, -kTwoPi * frac);
  }
  return out;
}

std::string cycle_class_name(CycleClass c) {
  switch (c) {
    case CycleClass::global_sign_flip: return "GlobalSignFlip";
    case CycleClass::identity: return "Identity";
    case CycleClass::mixed_phases: return "MixedPhases";
  }
  return "MixedPhases";
}

CycleOutcome classify_cycle(const SpaceConfig& config, double omega) {
  const double tol = config.tolerances().op;
  const OperatorMatrix u = time_evolution(config, omega, cycle_period(omega));
  CycleOutcome out;
  out.per_level_phase = u.diagonal_entries();

  std::optional<double> common;
  bool proportional = true;
  for (std::size_t j = 0; j < config.dim() && proportional; ++j) {
    const StateVector e = StateVector::basis(config.dim(), j);
    const PhaseComparison cmp = equal_up_to_global_phase(e, mat_apply(u, e), tol);
    if (!cmp.equal) {
      proportional = false;
    } else if (!common) {
      common = cmp.phase;
    } else if (phase_distance(*common, *cmp.phase) > tol) {
      proportional = false;
    }
  }
  if (!proportional) return out;

  out.global_phase = common;
  if (phase_distance(*common, kPi) <= tol) {
    out.classification = CycleClass::global_sign_flip;
  } else if (phase_distance(*common, 0.0) <= tol) {
    out.classification = CycleClass::identity;
  }
  return out;
}

std::vector<double> eta_sector_map(const SpaceConfig& config) {
  std::vector<double> eta(config.dim(), 0.5);
  eta.back() = 0.5 + static_cast<double>(config.dim()) / 2.0;
  return eta;
}

std::vector<CheckRecord> compare_shift_vs_evolution(const SpaceConfig& config,
                                                    double omega) {
  const double tol = config.tolerances().elem;
  const std::vector<Complex> u =
      time_evolution(config, omega, cycle_period(omega)).diagonal_entries();
  const std::vector<double> eta = eta_sector_map(config);

  double dev_sector = 0.0;
  double dev_uniform = 0.0;
  for (std::size_t n = 0; n < u.size(); ++n) {
    const double level = static_cast<double>(n);
    dev_sector = std::max(dev_sector,
                          std::abs(std::polar(1.0, -kTwoPi * (level + eta[n])) - u[n]));
    if (n + 1 < u.size()) {
      dev_uniform = std::max(dev_uniform,
                             std::abs(std::polar(1.0, -kTwoPi * (level + 0.5)) - u[n]));
    }
  }
  return {
      make_check("sector_equivalence",
                 "<n|U(2pi/omega)|n> = e^{-i2pi(n+eta_n)}, eta_n = 1/2 (n<s), "
                 "1/2+(s+1)/2 (n=s)",
                 dev_sector, tol),
      make_check("uniform_half_eta_below_top",
                 "<n|U(2pi/omega)|n> = e^{-i2pi(n+1/2)} for n != s", dev_uniform,
                 tol),
  };
}

}  // namespace pbphase
