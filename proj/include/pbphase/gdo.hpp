#pragma once

// Generally deformed oscillator at q a root of unity. Generalized number
// states |n+eta> are obtained from |n> by the continuous shift e^{-i eta Phi};
// the modified phase states, ladder operators A / A^dagger and q^{N_eta} are
// all expressed in standard number-basis coordinates.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbphase/numerics.hpp"
#include "pbphase/pb_core.hpp"
#include "pbphase/verification.hpp"

namespace pbphase {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EtaParameter {
  double value = 0.0;

  explicit EtaParameter(double v);
};

enum class ProfileVariant { linear, user };

std::string variant_name(ProfileVariant v);

// Table F_0..F_s with F_n standing for F(q^{n+eta}). Construction enforces
// F_n >= 0 and the cyclic condition F_0 > 0.
class DeformationProfile {
 public:
  static DeformationProfile from_values(std::vector<double> values,
                                        std::size_t dim);

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t n) const { return values_[n]; }
  std::size_t size() const { return values_.size(); }
  ProfileVariant variant() const { return variant_; }
  bool all_positive() const;

 private:
  friend DeformationProfile deformation_linear(const SpaceConfig&, EtaParameter);

  DeformationProfile(std::vector<double> values, ProfileVariant variant)
      : values_(std::move(values)), variant_(variant) {}

  std::vector<double> values_;
  ProfileVariant variant_;
};

// F_n = n + eta; rejected unless eta > 0.
DeformationProfile deformation_linear(const SpaceConfig& config, EtaParameter eta);

struct GeneralizedFrame {
  SpaceConfig config;
  EtaParameter eta;
  Frame number_states;  // |n+eta> = e^{-i eta Phi}|n>
  Frame phase_states;   // (s+1)^{-1/2} sum_n e^{i(n+eta)theta_m}|n+eta>
  double number_deviation = 0.0;
  double phase_deviation = 0.0;
};

// e^{-i eta Phi} synthesized over the phase frame.
OperatorMatrix continuous_shift_operator(const SpaceConfig& config,
                                         EtaParameter eta);

GeneralizedFrame build_generalized_frame(const SpaceConfig& config,
                                         EtaParameter eta);

struct LadderOperators {
  OperatorMatrix annihilation;  // A
  OperatorMatrix creation;      // A^dagger
  OperatorMatrix q_number;      // q^{N_eta}, N_eta = N + eta
};

// All three in standard coordinates.
LadderOperators build_ladder_operators(const GeneralizedFrame& frame,
                                       const DeformationProfile& profile);

// A in generalized-number coordinates:
// A|n+eta> = sqrt(F_n)|n+eta-1>, A|eta> = sqrt(F_0) e^{i(s+1)theta0}|s+eta>.
OperatorMatrix annihilation_in_frame(const SpaceConfig& config,
                                     const DeformationProfile& profile);

// A F(q^{N_eta})^{-1/2}; refuses profiles with a zero entry.
OperatorMatrix recover_phase_operator(const OperatorMatrix& annihilation,
                                      const DeformationProfile& profile,
                                      const GeneralizedFrame& frame);

// q^{-N_eta} or q^{+N_eta} in standard coordinates (diagonal in the
// generalized number states with entries q^{-+(n+eta)}).
OperatorMatrix generalized_number_shift(const GeneralizedFrame& frame,
                                        ShiftSign sign);

// sum_{m=1}^{s} |theta_{m-1}><theta_m| + e^{-i 2 pi eta}|theta_s><theta_0|
// over the modified phase states.
OperatorMatrix modified_number_shift(const SpaceConfig& config, EtaParameter eta);

// (q^{-N_eta})^k by explicit repeated products.
OperatorMatrix cycle_operator_power(const SpaceConfig& config, EtaParameter eta,
                                    std::size_t k);

enum class CycleSign { no_sign_change, sign_change, general_phase };

// Integer eta -> no_sign_change, half-odd eta -> sign_change (tolerance 1e-9
// on the distance to the nearest half-integer lattice point).
CycleSign classify_eta_cycle(EtaParameter eta);

struct DualityResult {
  std::vector<CheckRecord> records;
  Complex phase_corner;  // <s|e^{i Phi}|0>
  Complex shift_corner;  // <theta_s|q^{-N_eta}|theta_0> (modified states)
};

// The four shift laws tying e^{i Phi} and q^{-N_eta} together, plus the
// corner-phase symmetry e^{i(s+1)theta0} <-> e^{-i 2 pi eta}.
DualityResult duality_check(const SpaceConfig& config, EtaParameter eta);

}  // namespace pbphase
