#include "entroverify/kernel_gradient.hpp"

#include <cmath>

namespace entroverify {

namespace {

using Solver = Eigen::SelfAdjointEigenSolver<Matrix>;

double support_cut(const RVector& w) { return kSupportCutoff * std::max(w.maxCoeff(), 0.0); }

Matrix spectral(const Solver& es, double cut, double (*f)(double, double), double p) {
  const RVector& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  RVector fw = RVector::Zero(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > cut) fw(i) = f(w(i), p);
  }
  return v * fw.cast<Complex>().asDiagonal() * v.adjoint();
}

double pow_fn(double x, double p) { return std::pow(x, p); }

// Adjoint of the Frechet derivative of M -> M^g (on the support): returns D
// with Tr(C d(M^g)) = Tr(D dM).
Matrix power_frechet_adjoint(const Solver& es, const Matrix& c, double g) {
  const RVector& mu = es.eigenvalues();
  const Matrix& u = es.eigenvectors();
  const double cut = support_cut(mu);
  const Eigen::Index n = mu.size();
  Matrix f = u.adjoint() * c * u;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double l = 0.0;
      if (mu(i) > cut && mu(j) > cut) {
        const double diff = mu(i) - mu(j);
        if (std::abs(diff) > 1e-10 * std::max(mu(i), mu(j))) {
          l = (std::pow(mu(i), g) - std::pow(mu(j), g)) / diff;
        } else {
          l = g * std::pow(0.5 * (mu(i) + mu(j)), g - 1.0);
        }
      }
      f(i, j) *= l;
    }
  }
  return u * f * u.adjoint();
}

Matrix trace_first(const Matrix& m, int d1, int d2) {
  Matrix out = Matrix::Zero(d2, d2);
  for (int a = 0; a < d1; ++a) out += m.block(a * d2, a * d2, d2, d2);
  return out;
}

Matrix id_kron(int d1, const Matrix& m) { return kron(Matrix::Identity(d1, d1), m); }

// Shared core: Q = Tr{(S X S)^alpha} with S = I_{d1} (x) T, T = M^gamma.
// Returns Q, the gradient with respect to X at fixed S, and the gradient
// with respect to M at fixed X.
struct CoreResult {
  double q;
  Matrix grad_x;
  Matrix grad_m;
};

CoreResult kernel_core(const Matrix& x, const Matrix& m, int d1, int d2, double alpha) {
  const double gamma = (1.0 - alpha) / (2.0 * alpha);
  const Solver es_m(0.5 * (m + m.adjoint()));
  const Matrix t = spectral(es_m, support_cut(es_m.eigenvalues()), pow_fn, gamma);
  const Matrix s = id_kron(d1, t);
  const Matrix sxs = s * x * s;
  const Solver es_x(0.5 * (sxs + sxs.adjoint()));
  const RVector& w = es_x.eigenvalues();
  const double cut = support_cut(w);
  double q = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > cut) q += std::pow(w(i), alpha);
  }
  const Matrix y = alpha * spectral(es_x, cut, pow_fn, alpha - 1.0);
  const Matrix sys = s * y * s;
  const Matrix xsy = x * s * y;
  const Matrix c = xsy + xsy.adjoint();
  const Matrix grad_m = power_frechet_adjoint(es_m, trace_first(c, d1, d2), gamma);
  return {q, sys, grad_m};
}

}  // namespace

ValueAndGradient conditional_kernel_gradient(const Matrix& omega, int d_b, int d_r, double alpha) {
  const Matrix m = trace_first(omega, d_b, d_r);
  CoreResult r = kernel_core(omega, m, d_b, d_r, alpha);
  Matrix g = r.grad_x + id_kron(d_b, r.grad_m);
  return {r.q, 0.5 * (g + g.adjoint())};
}

ValueAndGradient marginal_kernel_gradient(const Matrix& rho, const Matrix& sigma_b, int d_a,
                                          int d_b, double alpha) {
  CoreResult r = kernel_core(rho, sigma_b, d_a, d_b, alpha);
  return {r.q, 0.5 * (r.grad_m + r.grad_m.adjoint())};
}

ValueAndGradient conditional_entropy_gradient(const Matrix& omega, int d_b, int d_r) {
  const Matrix m = trace_first(omega, d_b, d_r);
  const Solver es_w(0.5 * (omega + omega.adjoint()));
  const Solver es_m(0.5 * (m + m.adjoint()));
  auto entropy = [](const RVector& w) {
    double s = 0.0;
    for (double x : w) {
      if (x > 0.0) s -= x * std::log2(x);
    }
    return s;
  };
  auto log2_fn = [](double x, double) { return std::log2(x); };
  const Matrix log_w = spectral(es_w, support_cut(es_w.eigenvalues()), log2_fn, 0.0);
  const Matrix log_m = spectral(es_m, support_cut(es_m.eigenvalues()), log2_fn, 0.0);
  // d(-Tr w log w) = -Tr((log w + 1/ln2) dw); the constant cancels between
  // the joint and the marginal term.
  Matrix g = -log_w + id_kron(d_b, log_m);
  return {entropy(es_w.eigenvalues()) - entropy(es_m.eigenvalues()), 0.5 * (g + g.adjoint())};
}

}  // namespace entroverify
