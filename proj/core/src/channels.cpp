#include "entroverify/channels.hpp"

#include <cmath>
#include <sstream>

#include "entroverify/error.hpp"
#include "entroverify/random.hpp"

namespace entroverify {

namespace {

// vec(K) with the output index slow: entry b * d_in + a.
CVector vec_kraus(const Matrix& k) {
  const Matrix kt = k.transpose();
  return Eigen::Map<const CVector>(kt.data(), kt.size());
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus, double tol) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  d_out_ = static_cast<int>(kraus_.front().rows());
  d_in_ = static_cast<int>(kraus_.front().cols());
  if (d_in_ < 1 || d_out_ < 1) throw ValidationError("channel dimensions must be positive");
  Matrix sum = Matrix::Zero(d_in_, d_in_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      throw ValidationError("Kraus operators must share one shape");
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double dev = (sum - Matrix::Identity(d_in_, d_in_)).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream os;
    os << "channel is not trace preserving: max |sum K^dagger K - I| = " << dev;
    throw ValidationError(os.str());
  }
  choi_ = kraus_to_choi(kraus_, d_in_, d_out_);
}

DensityOperator QuantumChannel::apply(const DensityOperator& rho) const {
  if (rho.dim() != d_in_) {
    std::ostringstream os;
    os << "channel expects input dimension " << d_in_ << ", got " << rho.dim();
    throw ValidationError(os.str());
  }
  Matrix out = Matrix::Zero(d_out_, d_out_);
  for (const Matrix& k : kraus_) out.noalias() += k * rho.matrix() * k.adjoint();
  return DensityOperator(make_hermitian_unchecked(std::move(out)));
}

DensityOperator QuantumChannel::extend_apply(const DensityOperator& rho) const {
  const auto& dims = rho.dims();
  if (dims.size() != 2 || dims[0] != d_in_) {
    throw ValidationError("extend_apply expects dims (dimIn, dR)");
  }
  Matrix out = apply_kraus_first(kraus_, rho.matrix(), d_in_, dims[1]);
  return DensityOperator(make_hermitian_unchecked(std::move(out)), {d_out_, dims[1]});
}

Matrix QuantumChannel::adjoint_apply(const Matrix& x) const {
  Matrix out = Matrix::Zero(d_in_, d_in_);
  for (const Matrix& k : kraus_) out.noalias() += k.adjoint() * x * k;
  return out;
}

HermitianOperator kraus_to_choi(std::span<const Matrix> kraus, int d_in, int d_out) {
  const int n = d_in * d_out;
  Matrix c = Matrix::Zero(n, n);
  for (const Matrix& k : kraus) {
    const CVector v = vec_kraus(k);
    c.noalias() += v * v.adjoint();
  }
  return make_hermitian_unchecked(c / static_cast<double>(d_in));
}

std::vector<Matrix> choi_to_kraus(const HermitianOperator& choi, int d_in, int d_out) {
  if (choi.dim() != d_in * d_out) throw ValidationError("Choi matrix has the wrong dimension");
  const Spectrum s = eig_hermitian(choi);
  if (s.values(s.values.size() - 1) < -kNegativeEigenvalueTol) {
    throw ValidationError("Choi matrix is not positive semidefinite");
  }
  const double cutoff = kSupportCutoff * std::max(s.values(0), 0.0);
  std::vector<Matrix> kraus;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values(i) <= cutoff) break;
    const double w = std::sqrt(s.values(i) * d_in);
    Matrix k(d_out, d_in);
    for (int b = 0; b < d_out; ++b) {
      for (int a = 0; a < d_in; ++a) k(b, a) = w * s.vectors(b * d_in + a, i);
    }
    kraus.push_back(std::move(k));
  }
  return kraus;
}

QuantumChannel channel_from_choi(const HermitianOperator& choi, int d_in, int d_out) {
  return QuantumChannel(choi_to_kraus(choi, d_in, d_out), 1e-8);
}

QuantumChannel identity_channel(int d) {
  if (d < 1) throw ValidationError("identity channel needs d >= 1");
  return QuantumChannel({Matrix::Identity(d, d)});
}

QuantumChannel randomizing(int d_in, int d_out) {
  if (d_in < 1 || d_out < 1) throw ValidationError("randomizing channel needs positive dims");
  std::vector<Matrix> kraus;
  const double w = 1.0 / std::sqrt(static_cast<double>(d_out));
  for (int b = 0; b < d_out; ++b) {
    for (int a = 0; a < d_in; ++a) {
      Matrix k = Matrix::Zero(d_out, d_in);
      k(b, a) = w;
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel replacer(const DensityOperator& sigma, int d_in) {
  if (d_in < 1) throw ValidationError("replacer needs d_in >= 1");
  const Spectrum s = eig_hermitian(sigma.op());
  const int d_out = sigma.dim();
  std::vector<Matrix> kraus;
  for (int i = 0; i < d_out; ++i) {
    if (s.values(i) <= kSupportCutoff * s.values(0)) break;
    const CVector v = s.vectors.col(i) * std::sqrt(s.values(i));
    for (int a = 0; a < d_in; ++a) {
      Matrix k = Matrix::Zero(d_out, d_in);
      k.col(a) = v;
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel depolarizing(int d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarizing needs p in [0, 1]");
  return mixture(identity_channel(d), randomizing(d, d), p);
}

QuantumChannel pauli_channel(const std::array<double, 4>& p) {
  double total = 0.0;
  for (double x : p) {
    if (x < 0.0) throw ValidationError("Pauli probabilities must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("Pauli probabilities must sum to 1");
  const Complex i(0.0, 1.0);
  Matrix s[4] = {Matrix::Identity(2, 2), Matrix::Zero(2, 2), Matrix::Zero(2, 2),
                 Matrix::Zero(2, 2)};
  s[1](0, 1) = s[1](1, 0) = 1.0;
  s[2](0, 1) = -i;
  s[2](1, 0) = i;
  s[3](0, 0) = 1.0;
  s[3](1, 1) = -1.0;
  std::vector<Matrix> kraus;
  for (int k = 0; k < 4; ++k) {
    if (p[k] > 0.0) kraus.push_back(std::sqrt(p[k]) * s[k]);
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel random_channel(int d_in, int d_out, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1) throw ValidationError("random channel needs positive dims");
  Rng rng = make_rng(seed);
  const int d_env = d_in * d_out;
  const Matrix u = haar_unitary(d_out * d_env, rng);
  return QuantumChannel(stinespring_kraus(u, d_in, d_out, d_env));
}

QuantumChannel tensor(const QuantumChannel& n, const QuantumChannel& m) {
  std::vector<Matrix> kraus;
  kraus.reserve(n.kraus().size() * m.kraus().size());
  for (const Matrix& a : n.kraus()) {
    for (const Matrix& b : m.kraus()) kraus.push_back(kron(a, b));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel mixture(const QuantumChannel& n, const QuantumChannel& m, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("mixture weight must lie in [0, 1]");
  if (n.dim_in() != m.dim_in() || n.dim_out() != m.dim_out()) {
    throw ValidationError("mixture of channels with different dimensions");
  }
  const HermitianOperator c = n.choi() * (1.0 - p) + m.choi() * p;
  return channel_from_choi(c, n.dim_in(), n.dim_out());
}

}  // namespace entroverify
