#include "pbphase/pb_core.hpp"

#include <cmath>

namespace pbphase {

SpaceConfig SpaceConfig::from_dim(std::size_t dim, double theta0) {
  if (dim == 0) throw ConfigError("dim must be >= 1");
  if (!std::isfinite(theta0)) throw ConfigError("theta0 must be finite");
  return SpaceConfig(dim, theta0);
}

Complex SpaceConfig::q() const { return q_power(1); }

Complex SpaceConfig::q_power(long long k) const {
  const auto r = static_cast<double>(wrap_index(k, dim_));
  return std::polar(1.0, kTwoPi * r / static_cast<double>(dim_));
}

Complex SpaceConfig::q_real_power(double x) const {
  return std::polar(1.0, kTwoPi * x / static_cast<double>(dim_));
}

double SpaceConfig::theta(std::size_t m) const {
  return theta0_ + kTwoPi * static_cast<double>(m) / static_cast<double>(dim_);
}

PhaseFrame build_phase_frame(const SpaceConfig& config) {
  const std::size_t dim = config.dim();
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Frame states;
  states.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const double th = config.theta(m);
    std::vector<Complex> amp(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      amp[n] = std::polar(norm, static_cast<double>(n) * th);
    }
    states.emplace_back(std::move(amp));
  }
  const double dev = orthonormality_deviation(states);
  if (dev > config.tolerances().op) {
    throw NumericsError("phase frame failed orthonormality certification");
  }
  return {config, std::move(states), dev};
}

OperatorMatrix number_operator(const SpaceConfig& config) {
  std::vector<Complex> diag(config.dim());
  for (std::size_t n = 0; n < diag.size(); ++n) diag[n] = static_cast<double>(n);
  return with_certified_tag(OperatorMatrix::diagonal(diag), Tag::hermitian, 0.0);
}

OperatorMatrix hermitian_phase_operator(const SpaceConfig& config) {
  const PhaseFrame frame = build_phase_frame(config);
  const OperatorMatrix phi =
      phase_function_operator(frame, [](double th) { return Complex(th); });
  return with_certified_tag(phi, Tag::hermitian, config.tolerances().op);
}

OperatorMatrix unitary_phase_operator(const SpaceConfig& config) {
  const std::size_t dim = config.dim();
  std::vector<Complex> data(dim * dim);
  for (std::size_t n = 1; n < dim; ++n) data[(n - 1) * dim + n] = 1.0;
  // corner |s><0|; for dim 1 this is the only entry
  data[(dim - 1) * dim] +=
      std::polar(1.0, static_cast<double>(dim) * config.theta0());
  return with_certified_tag(OperatorMatrix(dim, std::move(data)), Tag::unitary,
                            config.tolerances().op);
}

OperatorMatrix unitary_phase_from_spectrum(const SpaceConfig& config) {
  const PhaseFrame frame = build_phase_frame(config);
  const OperatorMatrix u =
      phase_function_operator(frame, [](double th) { return std::polar(1.0, th); });
  return with_certified_tag(u, Tag::unitary, config.tolerances().op);
}

OperatorMatrix number_shift_operator(const SpaceConfig& config, ShiftSign sign) {
  std::vector<Complex> diag(config.dim());
  const long long dir = sign == ShiftSign::plus ? 1 : -1;
  for (std::size_t n = 0; n < diag.size(); ++n) {
    diag[n] = config.q_power(dir * static_cast<long long>(n));
  }
  return with_certified_tag(OperatorMatrix::diagonal(diag), Tag::unitary,
                            config.tolerances().op);
}

OperatorMatrix number_shift_realization(const SpaceConfig& config) {
  const PhaseFrame frame = build_phase_frame(config);
  const std::size_t dim = config.dim();
  std::vector<Complex> data(dim * dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const auto& ket = frame.states[wrap_index(static_cast<long long>(m) - 1, dim)];
    const auto& bra = frame.states[m];
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        data[r * dim + c] += ket[r] * std::conj(bra[c]);
  }
  return with_certified_tag(OperatorMatrix(dim, std::move(data)), Tag::unitary,
                            config.tolerances().op);
}

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  return subtract(mat_mul(lhs, rhs), mat_mul(rhs, lhs));
}

OperatorMatrix commutator_rhs_printed(const SpaceConfig& config) {
  const std::size_t dim = config.dim();
  const double d = static_cast<double>(dim);
  std::vector<Complex> data(dim * dim);
  // term (n' - n)|n'><n| lands on row n', column n
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if (row == col) continue;
      const double n = static_cast<double>(col);
      const double np = static_cast<double>(row);
      const Complex denom = std::polar(1.0, kTwoPi * (n - np) / d) - 1.0;
      data[row * dim + col] = (kTwoPi / d) * (np - n) / denom;
    }
  }
  return OperatorMatrix(dim, std::move(data));
}

OperatorMatrix commutator_closed_form(const SpaceConfig& config) {
  const std::size_t dim = config.dim();
  const double d = static_cast<double>(dim);
  std::vector<Complex> data(dim * dim);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if (row == col) continue;
      const double n = static_cast<double>(row);
      const double np = static_cast<double>(col);
      const Complex num = (kTwoPi / d) * (np - n) * std::polar(1.0, (n - np) * config.theta0());
      const Complex denom = std::polar(1.0, kTwoPi * (n - np) / d) - 1.0;
      data[row * dim + col] = num / denom;
    }
  }
  return OperatorMatrix(dim, std::move(data));
}

}  // namespace pbphase
