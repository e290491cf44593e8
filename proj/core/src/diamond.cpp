#include <algorithm>
#include <cmath>
#include <limits>

#include "entroverify/channels.hpp"
#include "entroverify/error.hpp"
#include "entroverify/random.hpp"

namespace entroverify {

namespace {

using Solver = Eigen::SelfAdjointEigenSolver<Matrix>;

Matrix sym(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double positive_sum(const RVector& w) { return w.cwiseMax(0.0).sum(); }

Matrix positive_projector(const Solver& es) {
  const Matrix& v = es.eigenvectors();
  Matrix p = Matrix::Zero(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    if (es.eigenvalues()(i) > 0.0) p.noalias() += v.col(i) * v.col(i).adjoint();
  }
  return p;
}

// Difference map Phi = N - M and its adjoint, extended by id_R.
struct DifferenceMap {
  const QuantumChannel& n;
  const QuantumChannel& m;

  Matrix forward(const Matrix& x, int d_r) const {
    return sym(apply_kraus_first(n.kraus(), x, n.dim_in(), d_r) -
               apply_kraus_first(m.kraus(), x, n.dim_in(), d_r));
  }

  Matrix adjoint(const Matrix& p, int d_r) const {
    const Matrix id = Matrix::Identity(d_r, d_r);
    Matrix out = Matrix::Zero(n.dim_in() * d_r, n.dim_in() * d_r);
    for (const Matrix& k : n.kraus()) {
      const Matrix kk = kron(k, id);
      out.noalias() += kk.adjoint() * p * kk;
    }
    for (const Matrix& k : m.kraus()) {
      const Matrix kk = kron(k, id);
      out.noalias() -= kk.adjoint() * p * kk;
    }
    return sym(out);
  }

  // Alternates the optimal discriminating projector and the top eigenvector
  // of the back-propagated objective; value is Tr(Phi(psi)_+).
  double seesaw(CVector psi, int d_r) const {
    double best = 0.0;
    for (int it = 0; it < 500; ++it) {
      const Solver es(forward(psi * psi.adjoint(), d_r));
      const double v = positive_sum(es.eigenvalues());
      const bool stalled = v - best < 1e-13;
      best = std::max(best, v);
      if (stalled && it > 0) break;
      const Solver back(adjoint(positive_projector(es), d_r));
      psi = back.eigenvectors().col(back.eigenvalues().size() - 1);
    }
    return best;
  }
};

void check_pair(const QuantumChannel& n, const QuantumChannel& m) {
  if (n.dim_in() != m.dim_in() || n.dim_out() != m.dim_out()) {
    throw ValidationError("channel distance needs channels with matching dimensions");
  }
}

// Primal value h(rho) = Tr((R J R)_+) and the dual certificate
// Z = R^-1 (R J R)_+ R^-1 with R = I (x) sqrt(rho). Z >= 0 and Z >= J, so
// lambda_max(Tr_out Z) bounds the halved diamond norm from above.
struct Certificate {
  double primal = 0.0;
  double dual = 0.0;
  Matrix supergradient;
};

Certificate certify(const Matrix& j, const Matrix& rho, int d_in, int d_out) {
  const Solver es(rho);
  const RVector w = es.eigenvalues().cwiseMax(0.0);
  const Matrix& u = es.eigenvectors();
  const Matrix sqrt_rho = u * w.cwiseSqrt().cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix id_out = Matrix::Identity(d_out, d_out);
  const Matrix r = kron(id_out, sqrt_rho);
  const Solver inner(sym(r * j * r));
  Certificate c;
  c.primal = positive_sum(inner.eigenvalues());
  if (w.minCoeff() <= 1e-300) {
    c.dual = std::numeric_limits<double>::infinity();
    return c;
  }
  const Matrix inv_sqrt = u * w.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix r_inv = kron(id_out, inv_sqrt);
  const Matrix& v = inner.eigenvectors();
  Matrix pos = Matrix::Zero(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const double l = inner.eigenvalues()(i);
    if (l > 0.0) pos.noalias() += l * v.col(i) * v.col(i).adjoint();
  }
  Matrix z = sym(r_inv * pos * r_inv);
  // Repair round-off infeasibility so the certificate stays valid.
  const double slack = std::min(Solver(z - j, Eigen::EigenvaluesOnly).eigenvalues().minCoeff(),
                                Solver(z, Eigen::EigenvaluesOnly).eigenvalues().minCoeff());
  if (slack < 0.0) z += (-slack) * Matrix::Identity(z.rows(), z.cols());
  const int keep[] = {1};
  const int dims[] = {d_out, d_in};
  c.supergradient = sym(partial_trace(z, dims, keep));
  c.dual = Solver(c.supergradient, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  return c;
}

}  // namespace

double channel_trace_distance(const QuantumChannel& n, const QuantumChannel& m, int restarts,
                              std::uint64_t seed) {
  check_pair(n, m);
  const DifferenceMap phi{n, m};
  Rng rng = make_rng(seed);
  double best = 0.0;
  for (int k = 0; k < std::max(restarts, 1); ++k) {
    CVector psi = k == 0 ? CVector(CVector::Unit(n.dim_in(), 0)) : haar_vector(n.dim_in(), rng);
    best = std::max(best, phi.seesaw(psi, 1));
  }
  return best;
}

DiamondBracket diamond_distance(const QuantumChannel& n, const QuantumChannel& m,
                                const DiamondOptions& opt) {
  check_pair(n, m);
  const int d_in = n.dim_in();
  const int d_out = n.dim_out();
  const DifferenceMap phi{n, m};
  const double scale = opt.halved ? 1.0 : 2.0;

  DiamondBracket br;
  // Lower end: explicit pure inputs on A (x) R with dR = dA.
  Rng rng = make_rng(opt.seed);
  CVector omega = CVector::Zero(d_in * d_in);
  for (int a = 0; a < d_in; ++a) omega(a * d_in + a) = 1.0 / std::sqrt(static_cast<double>(d_in));
  double lower = phi.seesaw(omega, d_in);
  for (int k = 0; k < opt.seesaw_restarts; ++k) {
    lower = std::max(lower, phi.seesaw(haar_vector(d_in * d_in, rng), d_in));
  }
  lower = std::max(lower, channel_trace_distance(n, m, opt.seesaw_restarts, mix_seed(opt.seed)));

  // Upper end: mirror ascent on the input state of the primal, tracking the
  // dual certificate at a few regularization levels.
  const Matrix j = (n.choi().matrix() - m.choi().matrix()) * static_cast<double>(d_in);
  const Matrix pi = Matrix::Identity(d_in, d_in) / static_cast<double>(d_in);
  const double deltas[] = {0.0, 1e-10, 1e-8, 1e-6, 1e-4};
  double upper = std::numeric_limits<double>::infinity();
  Matrix rho = pi;
  Certificate cur = certify(j, rho, d_in, d_out);
  lower = std::max(lower, cur.primal);
  upper = std::min(upper, cur.dual);
  double step = 1.0;
  int stale = 0;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (upper - lower <= opt.tolerance || upper < 1e-14) break;
    const Solver es(rho);
    const RVector w = es.eigenvalues().cwiseMax(1e-300);
    const Matrix log_rho =
        es.eigenvectors() * w.array().log().matrix().cast<Complex>().asDiagonal() *
        es.eigenvectors().adjoint();
    const double gscale = std::max(1e-300, cur.dual);
    bool accepted = false;
    while (step > 1e-14) {
      const Solver ex(sym(log_rho + (step / gscale) * cur.supergradient));
      RVector e = (ex.eigenvalues().array() - ex.eigenvalues().maxCoeff()).exp().matrix();
      e /= e.sum();
      Matrix trial =
          sym(ex.eigenvectors() * e.cast<Complex>().asDiagonal() * ex.eigenvectors().adjoint());
      Certificate c = certify(j, trial, d_in, d_out);
      if (c.primal >= cur.primal && !std::isinf(c.dual)) {
        rho = std::move(trial);
        cur = std::move(c);
        step = std::min(step * 1.5, 1e6);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    const double before = upper;
    lower = std::max(lower, cur.primal);
    upper = std::min(upper, cur.dual);
    for (double delta : deltas) {
      if (delta == 0.0) continue;
      const Certificate reg = certify(j, (1.0 - delta) * rho + delta * pi, d_in, d_out);
      lower = std::max(lower, reg.primal);
      upper = std::min(upper, reg.dual);
    }
    stale = upper < before - 1e-13 ? 0 : stale + 1;
    if (!accepted || stale > 2000) break;
  }
  upper = std::max(upper, lower);
  br.lower = lower * scale;
  br.upper = std::min(upper, 1.0) * scale;
  br.iterations = it;
  br.converged = (upper - lower) <= opt.tolerance;
  return br;
}

}  // namespace entroverify
