#include "pbphase/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pbphase {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

}  // namespace

TolerancePolicy TolerancePolicy::for_dim(std::size_t dim) {
  const auto d = static_cast<double>(std::max<std::size_t>(dim, 1));
  return {1e-12 * d, 1e-12 * d, 1e-11 * d};
}

StateVector::StateVector(std::vector<Complex> amp) : amp_(std::move(amp)) {
  if (amp_.empty()) throw DimensionError("state vector must have dim >= 1");
  if (!std::all_of(amp_.begin(), amp_.end(), finite)) {
    throw NumericsError("state vector has non-finite amplitude");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> amp(dim);
  amp[index] = 1.0;
  return StateVector(std::move(amp));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericsError("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> out(amp_);
  for (auto& a : out) a *= factor;
  return StateVector(std::move(out));
}

Complex inner(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double dev = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  return dev;
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim_ == 0) throw DimensionError("operator must have dim >= 1");
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("operator entry count does not match dim*dim");
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw NumericsError("operator has non-finite entry");
  }
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  std::vector<Complex> d(dim, 1.0);
  return diagonal(d);
}

OperatorMatrix OperatorMatrix::zero(std::size_t dim) {
  return OperatorMatrix(dim, std::vector<Complex>(dim * dim));
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const Complex> entries) {
  const std::size_t dim = entries.size();
  std::vector<Complex> data(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = entries[i];
  return with_certified_tag(OperatorMatrix(dim, std::move(data)), Tag::diagonal,
                            0.0);
}

StateVector OperatorMatrix::column(std::size_t col) const {
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, col);
  return StateVector(std::move(out));
}

std::vector<Complex> OperatorMatrix::diagonal_entries() const {
  std::vector<Complex> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, i);
  return out;
}

StateVector mat_apply(const OperatorMatrix& m, const StateVector& v) {
  require_same_dim(m.dim(), v.dim(), "mat_apply");
  const std::size_t n = m.dim();
  std::vector<Complex> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) sum += m(r, c) * v[c];
    out[r] = sum;
  }
  return StateVector(std::move(out));
}

OperatorMatrix mat_mul(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_dim(lhs.dim(), rhs.dim(), "mat_mul");
  const std::size_t n = lhs.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += a * rhs(k, c);
    }
  }
  OperatorMatrix result(n, std::move(out));
  if (lhs.has_tag(Tag::diagonal) && rhs.has_tag(Tag::diagonal)) {
    result.tags_ |= static_cast<std::uint8_t>(Tag::diagonal);
  }
  return result;
}

OperatorMatrix adjoint(const OperatorMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[c * n + r] = std::conj(m(r, c));
  }
  OperatorMatrix result(n, std::move(out));
  result.tags_ = m.tags_;
  return result;
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "add");
  std::vector<Complex> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data()[i];
  return OperatorMatrix(a.dim(), std::move(out));
}

OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b) {
  return add(a, scale(b, -1.0));
}

OperatorMatrix scale(const OperatorMatrix& m, Complex factor) {
  std::vector<Complex> out(m.data().begin(), m.data().end());
  for (auto& x : out) x *= factor;
  return OperatorMatrix(m.dim(), std::move(out));
}

OperatorMatrix matrix_power(const OperatorMatrix& m, std::size_t k) {
  OperatorMatrix result = OperatorMatrix::identity(m.dim());
  for (std::size_t i = 0; i < k; ++i) result = mat_mul(result, m);
  return result;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double dev = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    dev = std::max(dev, std::abs(a.data()[i] - b.data()[i]));
  }
  return dev;
}

double max_abs(const OperatorMatrix& m) {
  double out = 0.0;
  for (const auto& x : m.data()) out = std::max(out, std::abs(x));
  return out;
}

PhaseComparison equal_up_to_global_phase(const StateVector& u,
                                         const StateVector& v, double tol) {
  require_same_dim(u.dim(), v.dim(), "equal_up_to_global_phase");
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) {
    throw NumericsError("global-phase comparison of a zero vector");
  }
  const Complex overlap = inner(u, v);
  if (std::abs(overlap) < nu * nv * (1.0 - tol)) return {false, std::nullopt};
  double phase = std::arg(overlap);
  // Rounding can land -1 just below the branch cut.
  if (phase <= -kPi + 1e-12) phase += kTwoPi;
  return {true, phase};
}

double phase_distance(double a, double b) {
  const double d = std::remainder(a - b, kTwoPi);
  return std::abs(d);
}

double orthonormality_deviation(const Frame& frame) {
  double dev = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const Complex g = inner(frame[i], frame[j]);
      dev = std::max(dev, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return dev;
}

OperatorMatrix spectral_synthesize(const Frame& eigvecs,
                                   std::span<const Complex> eigvals,
                                   double tol) {
  if (eigvecs.empty()) throw DimensionError("empty eigenframe");
  const std::size_t n = eigvecs.front().dim();
  if (eigvecs.size() != n || eigvals.size() != n) {
    throw DimensionError("eigenframe must be complete (count == dim)");
  }
  for (const auto& v : eigvecs) require_same_dim(v.dim(), n, "spectral_synthesize");
  const double dev = orthonormality_deviation(eigvecs);
  if (dev > tol) {
    std::ostringstream os;
    os << "eigenframe not orthonormal: max Gram deviation " << dev
       << " exceeds " << tol;
    throw NumericsError(os.str());
  }
  std::vector<Complex> out(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = eigvecs[k];
    for (std::size_t r = 0; r < n; ++r) {
      const Complex lv = eigvals[k] * v[r];
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += lv * std::conj(v[c]);
    }
  }
  return OperatorMatrix(n, std::move(out));
}

namespace {

OperatorMatrix frame_matrix(const Frame& frame) {
  if (frame.empty()) throw DimensionError("empty frame");
  const std::size_t n = frame.front().dim();
  if (frame.size() != n) throw DimensionError("frame must be complete");
  std::vector<Complex> w(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    require_same_dim(frame[c].dim(), n, "frame");
    for (std::size_t r = 0; r < n; ++r) w[r * n + c] = frame[c][r];
  }
  return OperatorMatrix(n, std::move(w));
}

}  // namespace

OperatorMatrix to_frame_coordinates(const OperatorMatrix& m, const Frame& frame) {
  const OperatorMatrix w = frame_matrix(frame);
  return mat_mul(adjoint(w), mat_mul(m, w));
}

OperatorMatrix from_frame_coordinates(const OperatorMatrix& m,
                                      const Frame& frame) {
  const OperatorMatrix w = frame_matrix(frame);
  return mat_mul(w, mat_mul(m, adjoint(w)));
}

Certification certify(const OperatorMatrix& m, Tag tag, double tol) {
  const std::size_t n = m.dim();
  double dev = 0.0;
  switch (tag) {
    case Tag::hermitian:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          dev = std::max(dev, std::abs(m(r, c) - std::conj(m(c, r))));
      break;
    case Tag::unitary:
      dev = max_abs_diff(mat_mul(adjoint(m), m), OperatorMatrix::identity(n));
      break;
    case Tag::diagonal:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (r != c) dev = std::max(dev, std::abs(m(r, c)));
      break;
  }
  return {dev <= tol, dev};
}

OperatorMatrix with_certified_tag(const OperatorMatrix& m, Tag tag, double tol) {
  OperatorMatrix out = m;
  if (certify(m, tag, tol).certified) out.tags_ |= static_cast<std::uint8_t>(tag);
  return out;
}

std::size_t wrap_index(long long k, std::size_t dim) {
  if (dim == 0) throw DimensionError("wrap_index with dim 0");
  const auto d = static_cast<long long>(dim);
  return static_cast<std::size_t>(((k % d) + d) % d);
}

std::string tag_name(Tag tag) {
  switch (tag) {
    case Tag::hermitian: return "hermitian";
    case Tag::unitary: return "unitary";
    case Tag::diagonal: return "diagonal";
  }
  return "unknown";
}

}  // namespace pbphase
