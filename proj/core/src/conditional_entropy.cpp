#include "entroverify/conditional_entropy.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "entroverify/error.hpp"
#include "entroverify/kernel_gradient.hpp"
#include "entroverify/random.hpp"

namespace entroverify {

namespace {

HermitianOperator lift_b(int d_a, const HermitianOperator& sigma_b) {
  return kron(HermitianOperator::identity(d_a), sigma_b);
}

// Matrix exponential / logarithm of a Hermitian matrix (natural base).
Matrix herm_exp(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  const RVector w = es.eigenvalues();
  const double shift = w.maxCoeff();
  RVector e = (w.array() - shift).exp().matrix();
  return es.eigenvectors() * e.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix herm_log(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  RVector l = es.eigenvalues().cwiseMax(1e-300).array().log().matrix();
  return es.eigenvectors() * l.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix normalized(Matrix m) {
  m = 0.5 * (m + m.adjoint());
  return m / m.trace().real();
}

// Orthonormal Hermitian basis of d x d matrices (Tr E_k E_l = delta_kl).
std::vector<Matrix> hermitian_basis(int d) {
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i) {
    Matrix e = Matrix::Zero(d, d);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Matrix x = Matrix::Zero(d, d);
      x(i, j) = x(j, i) = r;
      basis.push_back(x);
      Matrix y = Matrix::Zero(d, d);
      y(i, j) = Complex(0.0, -r);
      y(j, i) = Complex(0.0, r);
      basis.push_back(y);
    }
  }
  return basis;
}

enum class MarginalObjective { renyi, tsallis };

// Minimizes D(rho || I_A (x) sigma_B) over states sigma_B by entropic mirror
// descent (multiplicative exponentiated-gradient updates).
MarginalOptimum minimize_over_marginal(const BipartiteState& rho, RenyiOrder order,
                                       MarginalObjective kind, const OptimizerConfig& opt) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const double alpha = order.alpha();
  const Matrix& r = rho.op().matrix();

  auto from_kernel = [&](double q) {
    return kind == MarginalObjective::renyi ? renyi_from_kernel(q, order)
                                            : tsallis_from_kernel(q, order);
  };
  auto value = [&](const Matrix& sigma) {
    return from_kernel(marginal_kernel_gradient(r, sigma, da, db, alpha).value);
  };
  auto value_and_gradient = [&](const Matrix& sigma) -> ValueAndGradient {
    if (opt.gradient == GradientMode::analytic) {
      ValueAndGradient vg = marginal_kernel_gradient(r, sigma, da, db, alpha);
      const double scale = kind == MarginalObjective::renyi
                               ? 1.0 / ((alpha - 1.0) * vg.value * std::log(2.0))
                               : 1.0 / (alpha - 1.0);
      return {from_kernel(vg.value), vg.gradient * scale};
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma, Eigen::EigenvaluesOnly);
    const double h = opt.fd_step * std::min(1.0, es.eigenvalues().minCoeff());
    Matrix g = Matrix::Zero(db, db);
    for (const Matrix& e : hermitian_basis(db)) {
      const double d = (value(sigma + h * e) - value(sigma - h * e)) / (2.0 * h);
      g += d * e;
    }
    return {value(sigma), g};
  };

  const Matrix pi = Matrix::Identity(db, db) / static_cast<double>(db);
  auto regularize = [&](const Matrix& s) {
    return normalized((1.0 - opt.interior) * s + opt.interior * pi);
  };

  std::vector<Matrix> starts;
  starts.push_back(regularize(rho.marginal_b().matrix()));
  starts.push_back(pi);
  Rng rng = make_rng(opt.seed);
  while (static_cast<int>(starts.size()) < std::max(opt.restarts, 1)) {
    starts.push_back(regularize(random_density(db, db, rng).matrix()));
  }
  starts.resize(std::max(opt.restarts, 1));

  MarginalOptimum best;
  best.value = kInfinity;
  Matrix best_sigma = pi;
  bool any_converged = false;
  int total_iterations = 0;

  for (const Matrix& start : starts) {
    Matrix sigma = start;
    ValueAndGradient cur = value_and_gradient(sigma);
    double step = opt.initial_step;
    bool converged = db == 1;
    int it = 0;
    for (; it < opt.max_iterations && !converged; ++it) {
      const Matrix log_sigma = herm_log(sigma);
      bool accepted = false;
      while (step > 1e-16) {
        const Matrix trial = regularize(normalized(herm_exp(log_sigma - step * cur.gradient)));
        const double v = value(trial);
        if (v < cur.value) {
          const double change = cur.value - v;
          sigma = trial;
          cur = value_and_gradient(sigma);
          step *= 1.5;
          accepted = true;
          if (change < opt.tolerance) converged = true;
          break;
        }
        step *= 0.5;
      }
      // No descent direction left at machine precision.
      if (!accepted) converged = true;
    }
    total_iterations += it;
    any_converged = any_converged || converged;
    if (cur.value < best.value) {
      best.value = cur.value;
      best_sigma = sigma;
    }
  }

  if (!any_converged && opt.throw_on_failure) {
    std::ostringstream os;
    os << "marginal optimizer did not converge after " << starts.size()
       << " restarts; best divergence " << best.value;
    throw OptimizerError(os.str(), best.value);
  }
  best.argmin = DensityOperator(make_hermitian_unchecked(best_sigma));
  best.converged = any_converged;
  best.iterations = total_iterations;
  return best;
}

double purity(const DensityOperator& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace

double cond_entropy(const BipartiteState& rho) {
  return von_neumann_entropy(rho.op()) - von_neumann_entropy(rho.marginal_b().op());
}

double conditional_kernel(const BipartiteState& rho, RenyiOrder order) {
  return trace_functional(rho.op(), lift_b(rho.dim_a(), rho.marginal_b().op()), order);
}

double renyi_down(const BipartiteState& rho, RenyiOrder order) {
  return -renyi_from_kernel(conditional_kernel(rho, order), order);
}

double tsallis_down_sandwiched(const BipartiteState& rho, RenyiOrder order) {
  return -tsallis_from_kernel(conditional_kernel(rho, order), order);
}

MarginalOptimum renyi_up(const BipartiteState& rho, RenyiOrder order, const OptimizerConfig& opt) {
  MarginalOptimum m = minimize_over_marginal(rho, order, MarginalObjective::renyi, opt);
  m.value = -m.value;
  return m;
}

MarginalOptimum tsallis_up_sandwiched(const BipartiteState& rho, RenyiOrder order,
                                      const OptimizerConfig& opt) {
  MarginalOptimum m = minimize_over_marginal(rho, order, MarginalObjective::tsallis, opt);
  m.value = -m.value;
  return m;
}

double sandwiched_renyi_to_marginal(const BipartiteState& rho, const HermitianOperator& sigma_b,
                                    RenyiOrder order) {
  return sandwiched_renyi(rho.op(), lift_b(rho.dim_a(), sigma_b), order);
}

double plain_tsallis_to_marginal(const BipartiteState& rho, const HermitianOperator& sigma_b,
                                 RenyiOrder order) {
  return tsallis_relative(rho.op(), lift_b(rho.dim_a(), sigma_b), order);
}

double tsallis_down_plain(const BipartiteState& rho, RenyiOrder order) {
  return -plain_tsallis_to_marginal(rho, rho.marginal_b().op(), order);
}

double tsallis_up_plain_closed(const BipartiteState& rho, RenyiOrder order) {
  const double a = order.alpha();
  if (!(a < 2.0)) {
    std::ostringstream os;
    os << "closed-form plain Tsallis T-up requires alpha in (0,1) u (1,2), got " << a;
    throw ValidationError(os.str());
  }
  const HermitianOperator reduced =
      trace_out_first(frac_power(rho.op(), a), rho.dim_a(), rho.dim_b());
  const double inner = trace_power(reduced, 1.0 / a);
  return (std::pow(inner, a) - 1.0) / (1.0 - a);
}

double duality_gap(const DensityOperator& pure_abc, RenyiOrder order) {
  const double a = order.alpha();
  if (!(a < 2.0)) {
    std::ostringstream os;
    os << "duality requires alpha in (0, 2), got " << a;
    throw ValidationError(os.str());
  }
  if (pure_abc.dims().size() != 3) {
    throw ValidationError("duality_gap needs a tripartite state with dims (dA, dB, dC)");
  }
  if (std::abs(purity(pure_abc) - 1.0) > 1e-10) {
    throw ValidationError("duality_gap requires a pure input state (mixed state given)");
  }
  const auto& d = pure_abc.dims();
  const int keep_ab[] = {0, 1};
  const int keep_ac[] = {0, 2};
  const BipartiteState ab(partial_trace(pure_abc.op(), d, keep_ab), d[0], d[1]);
  const BipartiteState ac(partial_trace(pure_abc.op(), d, keep_ac), d[0], d[2]);
  return tsallis_down_plain(ab, order) + tsallis_down_plain(ac, RenyiOrder(2.0 - a));
}

double renyi_up_duality_gap(const DensityOperator& pure_abc, RenyiOrder order,
                            const OptimizerConfig& opt) {
  const double a = order.alpha();
  if (!(a > 0.5)) throw ValidationError("renyi_up duality requires alpha > 1/2");
  if (pure_abc.dims().size() != 3) {
    throw ValidationError("renyi_up_duality_gap needs a tripartite state");
  }
  if (std::abs(purity(pure_abc) - 1.0) > 1e-10) {
    throw ValidationError("renyi_up_duality_gap requires a pure input state");
  }
  const double beta = a / (2.0 * a - 1.0);
  const auto& d = pure_abc.dims();
  const int keep_ab[] = {0, 1};
  const int keep_ac[] = {0, 2};
  const BipartiteState ab(partial_trace(pure_abc.op(), d, keep_ab), d[0], d[1]);
  const BipartiteState ac(partial_trace(pure_abc.op(), d, keep_ac), d[0], d[2]);
  return renyi_up(ab, order, opt).value + renyi_up(ac, RenyiOrder(beta), opt).value;
}

}  // namespace entroverify
