#pragma once

// Pegg-Barnett phase formalism on a (s+1)-dimensional space: phase states,
// the hermitian and unitary phase operators, the number-shift operator q^{-N}
// and the [Phi, N] commutator in its direct, closed and printed-sum forms.

#include <cstddef>
#include <stdexcept>

#include "pbphase/numerics.hpp"

namespace pbphase {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpaceConfig {
 public:
  // dim = s + 1 >= 1; theta0 is the phase window origin.
  static SpaceConfig from_dim(std::size_t dim, double theta0 = 0.0);

  std::size_t dim() const { return dim_; }
  std::size_t s() const { return dim_ - 1; }
  double theta0() const { return theta0_; }

  // q = exp(2 pi i / (s+1)).
  Complex q() const;
  // q^k for integer k, reduced mod dim before exponentiating.
  Complex q_power(long long k) const;
  // q^x = exp(2 pi i x / (s+1)) for real x.
  Complex q_real_power(double x) const;
  // theta_m = theta0 + 2 pi m / (s+1).
  double theta(std::size_t m) const;

  TolerancePolicy tolerances() const { return TolerancePolicy::for_dim(dim_); }

 private:
  SpaceConfig(std::size_t dim, double theta0) : dim_(dim), theta0_(theta0) {}

  std::size_t dim_;
  double theta0_;
};

struct PhaseFrame {
  SpaceConfig config;
  Frame states;  // |theta_0> .. |theta_s> in number-basis coordinates
  double orthonormality_deviation = 0.0;
};

PhaseFrame build_phase_frame(const SpaceConfig& config);

OperatorMatrix number_operator(const SpaceConfig& config);

// sum_m f(theta_m) |theta_m><theta_m|.
template <typename F>
OperatorMatrix phase_function_operator(const PhaseFrame& frame, F&& f) {
  std::vector<Complex> eig(frame.states.size());
  for (std::size_t m = 0; m < eig.size(); ++m) eig[m] = f(frame.config.theta(m));
  return spectral_synthesize(frame.states, eig, frame.config.tolerances().op);
}

OperatorMatrix hermitian_phase_operator(const SpaceConfig& config);

// Explicit cyclic down-shift |n-1><n| with corner e^{i(s+1)theta0}|s><0|.
OperatorMatrix unitary_phase_operator(const SpaceConfig& config);

// sum_m e^{i theta_m} |theta_m><theta_m|.
OperatorMatrix unitary_phase_from_spectrum(const SpaceConfig& config);

enum class ShiftSign { plus, minus };

// q^{+N} (plus) or q^{-N} (minus), diagonal in the number basis.
OperatorMatrix number_shift_operator(const SpaceConfig& config, ShiftSign sign);

// sum_m |theta_{m-1 mod dim}><theta_m| built from the phase frame.
OperatorMatrix number_shift_realization(const SpaceConfig& config);

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

// The textbook double sum with denominator exp[2 pi i (n - n')/(s+1)] - 1,
// evaluated with n, n' over 0..s and hbar = 1. Known not to agree with the
// direct commutator; kept for side-by-side reporting.
OperatorMatrix commutator_rhs_printed(const SpaceConfig& config);

// [Phi, N] computed in closed form from the phase-state expansion:
// (n, n') -> (2 pi/(s+1)) (n' - n) e^{i(n-n')theta0} / (e^{2 pi i(n-n')/(s+1)} - 1).
OperatorMatrix commutator_closed_form(const SpaceConfig& config);

}  // namespace pbphase
