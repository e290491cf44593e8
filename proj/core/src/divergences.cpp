#include "entroverify/divergences.hpp"

#include <cmath>
#include <sstream>

#include "entroverify/error.hpp"

namespace entroverify {

namespace {

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "divergence arguments have different dimensions: " << a.dim() << " vs " << b.dim();
    throw ValidationError(os.str());
  }
}

// A zero kernel only arises from orthogonal supports (alpha < 1).
bool kernel_vanishes(double q) { return !(q > 1e-300); }

}  // namespace

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha), gamma_((1.0 - alpha) / (2.0 * alpha)) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << "order alpha must be a positive finite number, got " << alpha;
    throw ValidationError(os.str());
  }
  if (alpha == 1.0) {
    throw ValidationError(
        "order alpha = 1 is not a Renyi/Tsallis order; use relative_entropy or cond_entropy");
  }
}

bool support_contained(const HermitianOperator& rho, const HermitianOperator& sigma) {
  require_same_dim(rho, sigma);
  const Matrix p_rho = support_projector(rho).matrix();
  const Matrix p_sigma = support_projector(sigma).matrix();
  const Matrix leak = (Matrix::Identity(rho.dim(), rho.dim()) - p_sigma) * p_rho;
  // ||leak||_op^2 = lambda_max(leak^dagger leak)
  Eigen::SelfAdjointEigenSolver<Matrix> es(leak.adjoint() * leak, Eigen::EigenvaluesOnly);
  const double op_norm = std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
  return op_norm <= kSupportInclusionTol;
}

double relative_entropy(const HermitianOperator& rho, const HermitianOperator& sigma) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho, sigma)) return kInfinity;
  const Matrix diff = log2_support(rho).matrix() - log2_support(sigma).matrix();
  return (rho.matrix() * diff).trace().real();
}

double trace_functional(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order) {
  require_same_dim(rho, sigma);
  const HermitianOperator s = frac_power(sigma, order.gamma());
  const HermitianOperator x = rho.congruence(s.matrix());
  return trace_power(x, order.alpha());
}

double renyi_from_kernel(double kernel, RenyiOrder order) {
  if (kernel_vanishes(kernel)) return kInfinity;
  return std::log2(kernel) / (order.alpha() - 1.0);
}

double tsallis_from_kernel(double kernel, RenyiOrder order) {
  return (kernel - 1.0) / (order.alpha() - 1.0);
}

double sandwiched_renyi(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order) {
  require_same_dim(rho, sigma);
  if (order.alpha() > 1.0 && !support_contained(rho, sigma)) return kInfinity;
  return renyi_from_kernel(trace_functional(rho, sigma, order), order);
}

double sandwiched_tsallis(const HermitianOperator& rho, const HermitianOperator& sigma,
                          RenyiOrder order) {
  require_same_dim(rho, sigma);
  if (order.alpha() > 1.0 && !support_contained(rho, sigma)) return kInfinity;
  return tsallis_from_kernel(trace_functional(rho, sigma, order), order);
}

double tsallis_relative(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order) {
  require_same_dim(rho, sigma);
  if (order.alpha() > 1.0 && !support_contained(rho, sigma)) return kInfinity;
  const Matrix a = frac_power(rho, order.alpha()).matrix();
  const Matrix b = frac_power(sigma, 1.0 - order.alpha()).matrix();
  return tsallis_from_kernel((a * b).trace().real(), order);
}

double tsallis_entropy(const HermitianOperator& rho, RenyiOrder order) {
  return (trace_power(rho, order.alpha()) - 1.0) / (1.0 - order.alpha());
}

double renyi_entropy(const HermitianOperator& rho, RenyiOrder order) {
  return std::log2(trace_power(rho, order.alpha())) / (1.0 - order.alpha());
}

}  // namespace entroverify
