#include "entroverify/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entroverify/error.hpp"

namespace entroverify {

namespace {

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

}  // namespace

double max_asymmetry(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "operator must be square, got " << m.rows() << "x" << m.cols();
    throw ValidationError(os.str());
  }
  if (m.rows() == 0) throw ValidationError("operator must have positive dimension");
  const double asym = max_asymmetry(m);
  if (!(asym <= tol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M - M^dagger| = " << asym << " exceeds " << tol;
    throw ValidationError(os.str());
  }
  m_ = symmetrize(m);
}

HermitianOperator::HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}

HermitianOperator make_hermitian_unchecked(Matrix m) {
  return HermitianOperator(symmetrize(m), HermitianOperator::Trusted{});
}

HermitianOperator HermitianOperator::identity(int d) {
  return HermitianOperator(Matrix::Identity(d, d), Trusted{});
}

HermitianOperator HermitianOperator::zero(int d) {
  return HermitianOperator(Matrix::Zero(d, d), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> values) {
  RVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return diagonal(v);
}

HermitianOperator HermitianOperator::diagonal(const RVector& values) {
  return HermitianOperator(values.cast<Complex>().asDiagonal().toDenseMatrix(), Trusted{});
}

HermitianOperator HermitianOperator::projector(const CVector& v) {
  return HermitianOperator(v * v.adjoint(), Trusted{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw ValidationError("dimension mismatch in operator sum");
  return HermitianOperator(m_ + o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw ValidationError("dimension mismatch in operator difference");
  return HermitianOperator(m_ - o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s, Trusted{});
}

HermitianOperator HermitianOperator::congruence(const Matrix& x) const {
  return make_hermitian_unchecked(x.adjoint() * m_ * x);
}

DensityOperator::DensityOperator(HermitianOperator op, std::vector<int> dims)
    : op_(std::move(op)), dims_(std::move(dims)) {
  if (op_.dim() == 0) throw ValidationError("density operator must have positive dimension");
  if (dims_.empty()) dims_ = {op_.dim()};
  for (int d : dims_) {
    if (d < 1) throw ValidationError("subsystem dimensions must be positive");
  }
  if (product(dims_) != op_.dim()) {
    std::ostringstream os;
    os << "subsystem dimensions multiply to " << product(dims_) << " but operator has dimension "
       << op_.dim();
    throw ValidationError(os.str());
  }
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "density operator must have unit trace, got " << tr;
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(op_.matrix(), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kNegativeEigenvalueTol) {
    std::ostringstream os;
    os << "density operator must be positive semidefinite, min eigenvalue " << min_eig;
    throw ValidationError(os.str());
  }
}

DensityOperator DensityOperator::maximally_mixed(int d) {
  return DensityOperator(HermitianOperator::identity(d) * (1.0 / d));
}

DensityOperator DensityOperator::maximally_mixed(std::vector<int> dims) {
  const int d = product(dims);
  return DensityOperator(HermitianOperator::identity(d) * (1.0 / d), std::move(dims));
}

DensityOperator DensityOperator::pure(const CVector& psi, std::vector<int> dims) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw ValidationError("pure state vector must be nonzero");
  return DensityOperator(HermitianOperator::projector(psi / std::sqrt(n2)), std::move(dims));
}

DensityOperator DensityOperator::with_dims(std::vector<int> dims) const {
  return DensityOperator(op_, std::move(dims));
}

Spectrum eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const Eigen::Index n = h.dim();
  Spectrum s{RVector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    s.values(i) = es.eigenvalues()(n - 1 - i);
    s.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return s;
}

Spectrum eig_hermitian(const Matrix& m) { return eig_hermitian(HermitianOperator(m)); }

RVector psd_eigenvalues(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  RVector w = es.eigenvalues();
  if (w.size() > 0 && w.minCoeff() < -kNegativeEigenvalueTol) {
    std::ostringstream os;
    os << "operator must be positive semidefinite, min eigenvalue " << w.minCoeff();
    throw ValidationError(os.str());
  }
  return w.cwiseMax(0.0);
}

namespace {

// Applies f to the eigenvalues on the support; kernel maps to zero.
template <typename F>
HermitianOperator spectral_on_support(const HermitianOperator& h, F&& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const RVector& w = es.eigenvalues();
  if (w.minCoeff() < -kNegativeEigenvalueTol) {
    std::ostringstream os;
    os << "operator must be positive semidefinite, min eigenvalue " << w.minCoeff();
    throw ValidationError(os.str());
  }
  const double lmax = std::max(w.maxCoeff(), 0.0);
  const double cut = kSupportCutoff * lmax;
  const Matrix& v = es.eigenvectors();
  Matrix out = Matrix::Zero(h.dim(), h.dim());
  if (lmax <= 0.0) return make_hermitian_unchecked(std::move(out));
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > cut) out.noalias() += f(w(i)) * v.col(i) * v.col(i).adjoint();
  }
  return make_hermitian_unchecked(std::move(out));
}

}  // namespace

HermitianOperator frac_power(const HermitianOperator& h, double t) {
  return spectral_on_support(h, [t](double x) { return std::pow(x, t); });
}

HermitianOperator log2_support(const HermitianOperator& h) {
  return spectral_on_support(h, [](double x) { return std::log2(x); });
}

HermitianOperator support_projector(const HermitianOperator& h) {
  return spectral_on_support(h, [](double) { return 1.0; });
}

double trace_power(const HermitianOperator& h, double t) {
  const RVector w = psd_eigenvalues(h);
  if (w.size() == 0) return 0.0;
  const double cut = kSupportCutoff * w.maxCoeff();
  double s = 0.0;
  for (double x : w) {
    if (x > cut) s += std::pow(x, t);
  }
  return s;
}

Matrix partial_trace(const Matrix& m, std::span<const int> dims, std::span<const int> keep) {
  const int n = product(dims);
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "partial trace: subsystem dimensions multiply to " << n << " but operator is "
       << m.rows() << "x" << m.cols();
    throw ValidationError(os.str());
  }
  const int k = static_cast<int>(dims.size());
  std::vector<bool> kept(k, false);
  for (int idx : keep) {
    if (idx < 0 || idx >= k) throw ValidationError("partial trace: kept subsystem index out of range");
    kept[idx] = true;
  }
  // Row-major multi-index strides; the first subsystem is the slowest index.
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  int n_keep = 1, n_trace = 1;
  for (int i = 0; i < k; ++i) (kept[i] ? n_keep : n_trace) *= dims[i];

  // Map (kept index, traced index) -> full index.
  std::vector<int> full(static_cast<std::size_t>(n_keep) * n_trace);
  for (int idx = 0; idx < n; ++idx) {
    int rem = idx, ki = 0, ti = 0;
    for (int s = 0; s < k; ++s) {
      const int digit = rem / stride[s];
      rem %= stride[s];
      if (kept[s]) ki = ki * dims[s] + digit;
      else ti = ti * dims[s] + digit;
    }
    full[static_cast<std::size_t>(ki) * n_trace + ti] = idx;
  }
  Matrix out = Matrix::Zero(n_keep, n_keep);
  for (int i = 0; i < n_keep; ++i) {
    for (int j = 0; j < n_keep; ++j) {
      Complex acc = 0.0;
      for (int t = 0; t < n_trace; ++t) {
        acc += m(full[static_cast<std::size_t>(i) * n_trace + t],
                 full[static_cast<std::size_t>(j) * n_trace + t]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& m, std::span<const int> dims,
                                std::span<const int> keep) {
  return make_hermitian_unchecked(partial_trace(m.matrix(), dims, keep));
}

HermitianOperator trace_out_first(const HermitianOperator& m, int d_first, int d_second) {
  const int dims[] = {d_first, d_second};
  const int keep[] = {1};
  return partial_trace(m, dims, keep);
}

HermitianOperator trace_out_second(const HermitianOperator& m, int d_first, int d_second) {
  const int dims[] = {d_first, d_second};
  const int keep[] = {0};
  return partial_trace(m, dims, keep);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return make_hermitian_unchecked(kron(a.matrix(), b.matrix()));
}

double half_trace_norm(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "trace distance: dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw ValidationError(os.str());
  }
  return half_trace_norm(rho.op() - sigma.op());
}

JordanParts jordan_decompose(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const RVector& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  RVector wp = w.cwiseMax(0.0);
  RVector wn = (-w).cwiseMax(0.0);
  JordanParts parts{
      make_hermitian_unchecked(v * wp.cast<Complex>().asDiagonal() * v.adjoint()),
      make_hermitian_unchecked(v * wn.cast<Complex>().asDiagonal() * v.adjoint()),
      wp.sum()};
  return parts;
}

double von_neumann_entropy(const HermitianOperator& rho) {
  const RVector w = psd_eigenvalues(rho);
  double s = 0.0;
  for (double x : w) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

Matrix apply_kraus_first(std::span<const Matrix> kraus, const Matrix& rho, int d_in, int d_r) {
  if (kraus.empty()) throw ValidationError("empty Kraus list");
  if (rho.rows() != d_in * d_r) throw ValidationError("apply: input dimension mismatch");
  const int d_out = static_cast<int>(kraus.front().rows());
  Matrix out = Matrix::Zero(d_out * d_r, d_out * d_r);
  const Matrix id_r = Matrix::Identity(d_r, d_r);
  for (const Matrix& k : kraus) {
    const Matrix kk = kron(k, id_r);
    out.noalias() += kk * rho * kk.adjoint();
  }
  return out;
}

}  // namespace entroverify
