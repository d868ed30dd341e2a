#pragma once

// Dense complex linear algebra for small Hilbert spaces (dim up to a few
// hundred). Everything is row-major std::complex<double>; no external BLAS.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbphase {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for non-finite input, zero vectors and frames that fail
// orthonormality.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TolerancePolicy {
  double elem = 1e-12;
  double norm = 1e-12;
  double op = 1e-11;

  // Linear scaling with dimension.
  static TolerancePolicy for_dim(std::size_t dim);
};

class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amp);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amp_.size(); }
  std::span<const Complex> amp() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;
  StateVector normalized() const;
  StateVector scaled(Complex factor) const;

 private:
  std::vector<Complex> amp_;
};

// <u|v>, antilinear in the first argument.
Complex inner(const StateVector& u, const StateVector& v);
double max_abs_diff(const StateVector& a, const StateVector& b);

enum class Tag : std::uint8_t { hermitian = 1, unitary = 2, diagonal = 4 };

class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t dim, std::vector<Complex> row_major);

  static OperatorMatrix identity(std::size_t dim);
  static OperatorMatrix zero(std::size_t dim);
  static OperatorMatrix diagonal(std::span<const Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const { return data_; }
  bool has_tag(Tag tag) const {
    return (tags_ & static_cast<std::uint8_t>(tag)) != 0;
  }

  StateVector column(std::size_t col) const;
  std::vector<Complex> diagonal_entries() const;

 private:
  friend OperatorMatrix with_certified_tag(const OperatorMatrix&, Tag, double);
  friend OperatorMatrix mat_mul(const OperatorMatrix&, const OperatorMatrix&);
  friend OperatorMatrix adjoint(const OperatorMatrix&);

  std::size_t dim_;
  std::vector<Complex> data_;
  std::uint8_t tags_ = 0;
};

StateVector mat_apply(const OperatorMatrix& m, const StateVector& v);
OperatorMatrix mat_mul(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix adjoint(const OperatorMatrix& m);
OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scale(const OperatorMatrix& m, Complex factor);
// m^k by repeated multiplication; k = 0 gives the identity.
OperatorMatrix matrix_power(const OperatorMatrix& m, std::size_t k);

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);
double max_abs(const OperatorMatrix& m);

struct PhaseComparison {
  bool equal = false;
  // arg<u|v> in (-pi, pi], so that v = e^{i phase} u when equal.
  std::optional<double> phase;
};

PhaseComparison equal_up_to_global_phase(const StateVector& u,
                                         const StateVector& v, double tol);

// Smallest |a - b| modulo 2 pi.
double phase_distance(double a, double b);

// A list of column vectors in standard coordinates.
using Frame = std::vector<StateVector>;

// max |<v_i|v_j> - delta_ij| over the Gram matrix.
double orthonormality_deviation(const Frame& frame);

// sum_k eigvals[k] |v_k><v_k|. Throws NumericsError if the frame is not an
// orthonormal basis within tol.
OperatorMatrix spectral_synthesize(const Frame& eigvecs,
                                   std::span<const Complex> eigvals,
                                   double tol);

// W^dagger M W and W M W^dagger, where W has the frame vectors as columns.
OperatorMatrix to_frame_coordinates(const OperatorMatrix& m, const Frame& frame);
OperatorMatrix from_frame_coordinates(const OperatorMatrix& m,
                                      const Frame& frame);

struct Certification {
  bool certified = false;
  double deviation = 0.0;
};

// hermitian: max|M - M^dagger|; unitary: max|M^dagger M - I|;
// diagonal: largest off-diagonal modulus.
Certification certify(const OperatorMatrix& m, Tag tag, double tol);

// Copy of m carrying tag iff certify passes.
OperatorMatrix with_certified_tag(const OperatorMatrix& m, Tag tag, double tol);

// Mathematical modulus, result in [0, dim).
std::size_t wrap_index(long long k, std::size_t dim);

std::string tag_name(Tag tag);

}  // namespace pbphase
