#pragma once

// Dense Hermitian linear algebra and spectral calculus.
//
// Every operator is stored as a dynamic complex Eigen matrix. Hermitian
// operators are symmetrized on construction; fractional powers and
// logarithms act on the support (eigenvalues above a relative cutoff).

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entroverify {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNegativeEigenvalueTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues below kSupportCutoff * lambda_max are treated as zero.
inline constexpr double kSupportCutoff = 1e-12;

/// max |M - M^dagger| entrywise.
double max_asymmetry(const Matrix& m);

class HermitianOperator {
 public:
  HermitianOperator() = default;
  /// Throws ValidationError when the input deviates from its adjoint by more
  /// than `tol` in any entry. The stored matrix is (M + M^dagger) / 2.
  explicit HermitianOperator(const Matrix& m, double tol = kHermitianTol);

  static HermitianOperator identity(int d);
  static HermitianOperator zero(int d);
  static HermitianOperator diagonal(std::initializer_list<double> values);
  static HermitianOperator diagonal(const RVector& values);
  /// |v><v| (no normalization).
  static HermitianOperator projector(const CVector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;
  friend HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

  /// X^dagger H X for an arbitrary conformable X.
  HermitianOperator congruence(const Matrix& x) const;

 private:
  struct Trusted {};
  HermitianOperator(Matrix m, Trusted);
  friend HermitianOperator make_hermitian_unchecked(Matrix m);

  Matrix m_;
};

/// Symmetrizes without validating; for results of operations that are
/// Hermitian in exact arithmetic.
HermitianOperator make_hermitian_unchecked(Matrix m);

/// PSD, unit-trace operator with an attached subsystem-dimension list.
class DensityOperator {
 public:
  DensityOperator() = default;
  /// dims empty means a single system of dimension op.dim().
  explicit DensityOperator(HermitianOperator op, std::vector<int> dims = {});

  static DensityOperator maximally_mixed(int d);
  static DensityOperator maximally_mixed(std::vector<int> dims);
  /// |psi><psi| / <psi|psi>.
  static DensityOperator pure(const CVector& psi, std::vector<int> dims = {});

  const HermitianOperator& op() const { return op_; }
  operator const HermitianOperator&() const { return op_; }  // NOLINT
  const Matrix& matrix() const { return op_.matrix(); }
  int dim() const { return op_.dim(); }
  const std::vector<int>& dims() const { return dims_; }

  DensityOperator with_dims(std::vector<int> dims) const;

 private:
  HermitianOperator op_;
  std::vector<int> dims_;
};

/// Decomposition H = pos - neg with orthogonal PSD parts.
struct JordanParts {
  HermitianOperator pos;
  HermitianOperator neg;
  /// Tr pos (equals Tr neg when the input is traceless).
  double mass = 0.0;
};

/// Eigenvalues in descending order; columns of `vectors` match.
struct Spectrum {
  RVector values;
  Matrix vectors;
};

Spectrum eig_hermitian(const HermitianOperator& h);
/// Validates Hermiticity first; the error message names the asymmetry.
Spectrum eig_hermitian(const Matrix& m);

/// sum_{lambda_i > cutoff} lambda_i^t v_i v_i^dagger. Requires PSD input
/// (eigenvalues in [-1e-10, 0) are clipped, below that is an error).
HermitianOperator frac_power(const HermitianOperator& h, double t);

/// Logarithm base 2 on the support of a PSD operator.
HermitianOperator log2_support(const HermitianOperator& h);

/// Orthogonal projector onto the support (eigenvalues above the cutoff).
HermitianOperator support_projector(const HermitianOperator& h);

/// sum of lambda^t over the support of a PSD operator; t = 0 gives the rank.
double trace_power(const HermitianOperator& h, double t);

/// Eigenvalues of a PSD operator with round-off negatives clipped to zero.
/// Throws when an eigenvalue is below -1e-10.
RVector psd_eigenvalues(const HermitianOperator& h);

/// Traces out every subsystem not listed in `keep`; kept subsystems stay in
/// their original order.
HermitianOperator partial_trace(const HermitianOperator& m, std::span<const int> dims,
                                std::span<const int> keep);
Matrix partial_trace(const Matrix& m, std::span<const int> dims, std::span<const int> keep);

/// Bipartite shorthands for dims (d_first, d_second).
HermitianOperator trace_out_first(const HermitianOperator& m, int d_first, int d_second);
HermitianOperator trace_out_second(const HermitianOperator& m, int d_first, int d_second);

Matrix kron(const Matrix& a, const Matrix& b);
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

/// Halved trace distance: (1/2) sum |eig(rho - sigma)|.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
/// (1/2) ||h||_1 for an arbitrary Hermitian operator.
double half_trace_norm(const HermitianOperator& h);

JordanParts jordan_decompose(const HermitianOperator& h);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const HermitianOperator& rho);

/// sum_k (K_k (x) I_R) rho (K_k (x) I_R)^dagger for rho on A (x) R.
Matrix apply_kraus_first(std::span<const Matrix> kraus, const Matrix& rho, int d_in, int d_r);

}  // namespace entroverify
