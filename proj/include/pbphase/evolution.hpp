#pragma once

// Finite-dimensional harmonic oscillator with spectrum
// E_n = omega (n + 1/2 + (s+1)/2 delta_{n,s}) (hbar = 1), its one-period
// evolution U(2 pi/omega), and the per-level comparison with the
// eta-shifted number-shift operator.

#include <optional>
#include <vector>

#include "pbphase/numerics.hpp"
#include "pbphase/pb_core.hpp"
#include "pbphase/verification.hpp"

namespace pbphase {

struct OscillatorSpectrum {
  SpaceConfig config;
  double omega;
  std::vector<double> energies;
};

// Throws ConfigError if omega <= 0 or not finite.
OscillatorSpectrum oscillator_spectrum(const SpaceConfig& config, double omega = 1.0);

OperatorMatrix hamiltonian(const SpaceConfig& config, double omega = 1.0);

// diag(e^{-i E_n t}).
OperatorMatrix time_evolution(const SpaceConfig& config, double omega, double t);

inline double cycle_period(double omega) { return kTwoPi / omega; }

// exp(-i 2 pi {n + 1/2 + (s+1) delta_{n,s} / 2}) for each level n.
std::vector<Complex> cycle_phase_per_level(const SpaceConfig& config);

enum class CycleClass { global_sign_flip, identity, mixed_phases };

std::string cycle_class_name(CycleClass c);

struct CycleOutcome {
  CycleClass classification = CycleClass::mixed_phases;
  std::vector<Complex> per_level_phase;
  // Present when U(T) is a scalar multiple of I.
  std::optional<double> global_phase;
};

CycleOutcome classify_cycle(const SpaceConfig& config, double omega = 1.0);

// eta_n = 1/2 for n < s and 1/2 + (s+1)/2 for n = s.
std::vector<double> eta_sector_map(const SpaceConfig& config);

std::vector<CheckRecord> compare_shift_vs_evolution(const SpaceConfig& config,
                                                    double omega = 1.0);

}  // namespace pbphase
