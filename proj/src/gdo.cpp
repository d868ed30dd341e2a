#include "pbphase/gdo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pbphase/format.hpp"

namespace pbphase {

EtaParameter::EtaParameter(double v) : value(v) {
  if (!std::isfinite(v)) throw ConfigError("eta must be finite");
}

std::string variant_name(ProfileVariant v) {
  return v == ProfileVariant::linear ? "linear" : "user";
}

DeformationProfile DeformationProfile::from_values(std::vector<double> values,
                                                   std::size_t dim) {
  if (values.size() != dim) {
    std::ostringstream os;
    os << "profile has " << values.size() << " entries, expected dim = " << dim;
    throw ProfileError(os.str());
  }
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (!std::isfinite(values[n]) || values[n] < 0.0) {
      std::ostringstream os;
      os << "profile entry F_" << n << " = " << values[n] << " is not a non-negative real";
      throw ProfileError(os.str());
    }
  }
  if (values.front() <= 0.0) {
    throw ProfileError("profile violates the cyclic condition F_0 > 0");
  }
  return DeformationProfile(std::move(values), ProfileVariant::user);
}

bool DeformationProfile::all_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](double f) { return f > 0.0; });
}

DeformationProfile deformation_linear(const SpaceConfig& config, EtaParameter eta) {
  // min_n (n + eta) is attained at n = 0
  if (eta.value <= 0.0) {
    throw ProfileError("linear profile F_n = n + eta needs eta > 0 (F_0 = eta)");
  }
  std::vector<double> values(config.dim());
  for (std::size_t n = 0; n < values.size(); ++n) {
    values[n] = static_cast<double>(n) + eta.value;
  }
  return DeformationProfile(std::move(values), ProfileVariant::linear);
}

OperatorMatrix continuous_shift_operator(const SpaceConfig& config,
                                         EtaParameter eta) {
  const PhaseFrame frame = build_phase_frame(config);
  const OperatorMatrix u = phase_function_operator(
      frame, [&](double th) { return std::polar(1.0, -eta.value * th); });
  return with_certified_tag(u, Tag::unitary, config.tolerances().op);
}

GeneralizedFrame build_generalized_frame(const SpaceConfig& config,
                                         EtaParameter eta) {
  const std::size_t dim = config.dim();
  const OperatorMatrix shift = continuous_shift_operator(config, eta);
  Frame number_states;
  number_states.reserve(dim);
  for (std::size_t n = 0; n < dim; ++n) number_states.push_back(shift.column(n));

  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Frame phase_states;
  phase_states.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const double th = config.theta(m);
    std::vector<Complex> amp(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      const Complex c = std::polar(norm, (static_cast<double>(n) + eta.value) * th);
      for (std::size_t r = 0; r < dim; ++r) amp[r] += c * number_states[n][r];
    }
    phase_states.emplace_back(std::move(amp));
  }

  const double tol = config.tolerances().op;
  const double dn = orthonormality_deviation(number_states);
  const double dp = orthonormality_deviation(phase_states);
  if (dn > tol || dp > tol) {
    throw NumericsError("generalized frame failed orthonormality certification");
  }
  return {config, eta, std::move(number_states), std::move(phase_states), dn, dp};
}

OperatorMatrix annihilation_in_frame(const SpaceConfig& config,
                                     const DeformationProfile& profile) {
  const std::size_t dim = config.dim();
  if (profile.size() != dim) throw DimensionError("profile length != dim");
  std::vector<Complex> data(dim * dim);
  for (std::size_t n = 1; n < dim; ++n) {
    data[(n - 1) * dim + n] = std::sqrt(profile[n]);
  }
  data[(dim - 1) * dim] += std::sqrt(profile[0]) *
                           std::polar(1.0, static_cast<double>(dim) * config.theta0());
  return OperatorMatrix(dim, std::move(data));
}

namespace {

// A^dagger from its own action rules rather than as adjoint(A):
// A^dagger|n+eta> = sqrt(F_{n+1})|n+eta+1> (n != s),
// A^dagger|s+eta> = e^{-i(s+1)theta0} sqrt(F_0)|eta>.
OperatorMatrix creation_in_frame(const SpaceConfig& config,
                                 const DeformationProfile& profile) {
  const std::size_t dim = config.dim();
  std::vector<Complex> data(dim * dim);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    data[(n + 1) * dim + n] = std::sqrt(profile[n + 1]);
  }
  data[dim - 1] += std::sqrt(profile[0]) *
                   std::polar(1.0, -static_cast<double>(dim) * config.theta0());
  return OperatorMatrix(dim, std::move(data));
}

OperatorMatrix generalized_diagonal(const GeneralizedFrame& frame,
                                    const std::vector<Complex>& entries) {
  return from_frame_coordinates(OperatorMatrix::diagonal(entries),
                                frame.number_states);
}

}  // namespace

LadderOperators build_ladder_operators(const GeneralizedFrame& frame,
                                       const DeformationProfile& profile) {
  const SpaceConfig& config = frame.config;
  if (profile.size() != config.dim()) throw DimensionError("profile length != dim");
  if (!(profile[0] > 0.0)) {
    throw ProfileError("ladder operators need a cyclic profile (F_0 > 0)");
  }
  OperatorMatrix a = from_frame_coordinates(annihilation_in_frame(config, profile),
                                            frame.number_states);
  OperatorMatrix adag = from_frame_coordinates(creation_in_frame(config, profile),
                                               frame.number_states);
  std::vector<Complex> qn(config.dim());
  for (std::size_t n = 0; n < qn.size(); ++n) {
    qn[n] = config.q_real_power(static_cast<double>(n) + frame.eta.value);
  }
  OperatorMatrix q_number = with_certified_tag(generalized_diagonal(frame, qn),
                                               Tag::unitary, config.tolerances().op);
  return {std::move(a), std::move(adag), std::move(q_number)};
}

OperatorMatrix recover_phase_operator(const OperatorMatrix& annihilation,
                                      const DeformationProfile& profile,
                                      const GeneralizedFrame& frame) {
  if (!profile.all_positive()) {
    throw ProfileError("cannot invert F(q^N): profile has a zero entry");
  }
  std::vector<Complex> inv_sqrt(profile.size());
  for (std::size_t n = 0; n < inv_sqrt.size(); ++n) {
    inv_sqrt[n] = 1.0 / std::sqrt(profile[n]);
  }
  const OperatorMatrix result =
      mat_mul(annihilation, generalized_diagonal(frame, inv_sqrt));
  return with_certified_tag(result, Tag::unitary, frame.config.tolerances().op);
}

OperatorMatrix generalized_number_shift(const GeneralizedFrame& frame,
                                        ShiftSign sign) {
  const double dir = sign == ShiftSign::plus ? 1.0 : -1.0;
  std::vector<Complex> d(frame.config.dim());
  for (std::size_t n = 0; n < d.size(); ++n) {
    d[n] = frame.config.q_real_power(dir * (static_cast<double>(n) + frame.eta.value));
  }
  return with_certified_tag(generalized_diagonal(frame, d), Tag::unitary,
                            frame.config.tolerances().op);
}

OperatorMatrix modified_number_shift(const SpaceConfig& config, EtaParameter eta) {
  const GeneralizedFrame frame = build_generalized_frame(config, eta);
  const std::size_t dim = config.dim();
  std::vector<Complex> data(dim * dim);
  auto add_outer = [&](const StateVector& ket, const StateVector& bra, Complex w) {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        data[r * dim + c] += w * ket[r] * std::conj(bra[c]);
  };
  for (std::size_t m = 1; m < dim; ++m) {
    add_outer(frame.phase_states[m - 1], frame.phase_states[m], 1.0);
  }
  add_outer(frame.phase_states[dim - 1], frame.phase_states[0],
            std::polar(1.0, -kTwoPi * eta.value));
  return with_certified_tag(OperatorMatrix(dim, std::move(data)), Tag::unitary,
                            config.tolerances().op);
}

OperatorMatrix cycle_operator_power(const SpaceConfig& config, EtaParameter eta,
                                    std::size_t k) {
  const GeneralizedFrame frame = build_generalized_frame(config, eta);
  const OperatorMatrix shift = generalized_number_shift(frame, ShiftSign::minus);
  return with_certified_tag(matrix_power(shift, k), Tag::unitary,
                            config.tolerances().op);
}

CycleSign classify_eta_cycle(EtaParameter eta) {
  constexpr double kLatticeTol = 1e-9;
  const double v = eta.value;
  if (std::abs(v - std::round(v)) <= kLatticeTol) return CycleSign::no_sign_change;
  if (std::abs((v - 0.5) - std::round(v - 0.5)) <= kLatticeTol) {
    return CycleSign::sign_change;
  }
  return CycleSign::general_phase;
}

DualityResult duality_check(const SpaceConfig& config, EtaParameter eta) {
  const std::size_t dim = config.dim();
  const double tol = config.tolerances().op;
  const GeneralizedFrame frame = build_generalized_frame(config, eta);
  const OperatorMatrix shift = generalized_number_shift(frame, ShiftSign::minus);
  const OperatorMatrix phase = unitary_phase_operator(config);
  const Complex phase_factor = std::polar(1.0, static_cast<double>(dim) * config.theta0());
  const Complex cycle_factor = std::polar(1.0, -kTwoPi * eta.value);

  double dev_shift_down = 0.0;
  for (std::size_t m = 1; m < dim; ++m) {
    dev_shift_down = std::max(dev_shift_down,
        max_abs_diff(mat_apply(shift, frame.phase_states[m]), frame.phase_states[m - 1]));
  }
  const double dev_shift_corner =
      max_abs_diff(mat_apply(shift, frame.phase_states[0]),
                   frame.phase_states[dim - 1].scaled(cycle_factor));

  double dev_phase_down = 0.0;
  for (std::size_t n = 1; n < dim; ++n) {
    dev_phase_down = std::max(dev_phase_down,
        max_abs_diff(mat_apply(phase, frame.number_states[n]), frame.number_states[n - 1]));
  }
  const double dev_phase_corner =
      max_abs_diff(mat_apply(phase, frame.number_states[0]),
                   frame.number_states[dim - 1].scaled(phase_factor));

  const Complex phase_corner = phase(dim - 1, 0);
  const Complex shift_corner = inner(frame.phase_states[dim - 1],
                                     mat_apply(shift, frame.phase_states[0]));
  const double dev_corners = std::max(std::abs(phase_corner - phase_factor),
                                      std::abs(shift_corner - cycle_factor));

  DualityResult out{{}, phase_corner, shift_corner};
  out.records.push_back(make_check("duality_shift_phase_states",
      "q^{-N_eta}|theta_m> = |theta_{m-1}>, m != 0", dev_shift_down, tol));
  out.records.push_back(make_check("duality_shift_phase_corner",
      "q^{-N_eta}|theta_0> = e^{-i2pi eta}|theta_s>", dev_shift_corner, tol,
      "factor=" + format_complex(cycle_factor)));
  out.records.push_back(make_check("duality_phase_number_states",
      "e^{iPhi}|n+eta> = |n+eta-1>, n != 0", dev_phase_down, tol));
  out.records.push_back(make_check("duality_phase_number_corner",
      "e^{iPhi}|eta> = e^{i(s+1)theta0}|s+eta>", dev_phase_corner, tol,
      "factor=" + format_complex(phase_factor)));
  out.records.push_back(make_check("duality_corner_symmetry",
      "corner(e^{iPhi}) = e^{i(s+1)theta0}, corner(q^{-N_eta}) = e^{-i2pi eta}",
      dev_corners, tol,
      "phase_corner=" + format_complex(phase_corner) +
          " shift_corner=" + format_complex(shift_corner)));
  return out;
}

}  // namespace pbphase
