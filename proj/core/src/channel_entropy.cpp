#include "entroverify/channel_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entroverify/divergences.hpp"
#include "entroverify/error.hpp"
#include "entroverify/kernel_gradient.hpp"
#include "entroverify/parallel.hpp"
#include "entroverify/random.hpp"

namespace entroverify {

namespace {

struct Objective {
  const QuantumChannel& n;
  EntropySpec spec;

  int d_a() const { return n.dim_in(); }
  int d_b() const { return n.dim_out(); }

  Matrix output(const CVector& psi) const {
    return apply_kraus_first(n.kraus(), psi * psi.adjoint(), d_a(), d_a());
  }

  // Value and gradient with respect to omega.
  ValueAndGradient on_output(const Matrix& omega) const {
    if (spec.kind == EntropyKind::von_neumann) {
      return conditional_entropy_gradient(omega, d_b(), d_a());
    }
    ValueAndGradient q = conditional_kernel_gradient(omega, d_b(), d_a(), spec.alpha);
    const double a = spec.alpha;
    if (spec.kind == EntropyKind::renyi) {
      const double scale = 1.0 / ((1.0 - a) * q.value * std::log(2.0));
      return {std::log2(q.value) / (1.0 - a), q.gradient * scale};
    }
    return {(q.value - 1.0) / (1.0 - a), q.gradient / (1.0 - a)};
  }

  double value(const CVector& psi) const {
    const Matrix omega = output(psi);
    if (spec.kind == EntropyKind::von_neumann) {
      return conditional_entropy_gradient(omega, d_b(), d_a()).value;
    }
    const double q = conditional_kernel_gradient(omega, d_b(), d_a(), spec.alpha).value;
    if (spec.kind == EntropyKind::renyi) return std::log2(q) / (1.0 - spec.alpha);
    return (q - 1.0) / (1.0 - spec.alpha);
  }

  // Euclidean gradient of psi -> F(omega(psi)) on the real embedding:
  // dF = 2 Re <dpsi, M psi> with M = sum (K (x) I)^dagger G (K (x) I).
  std::pair<double, CVector> value_and_gradient(const CVector& psi, const OptimizerConfig& opt) const {
    if (opt.gradient == GradientMode::central_difference) {
      const Eigen::Index m = psi.size();
      CVector g(m);
      const double h = opt.fd_step;
      for (Eigen::Index k = 0; k < m; ++k) {
        for (int part = 0; part < 2; ++part) {
          CVector e = CVector::Zero(m);
          e(k) = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
          const CVector p = (psi + h * e).normalized();
          const CVector q = (psi - h * e).normalized();
          const double d = (value(p) - value(q)) / (2.0 * h);
          if (part == 0) g(k).real(d); else g(k).imag(d);
        }
      }
      return {value(psi), g};
    }
    const ValueAndGradient vg = on_output(output(psi));
    const Matrix id = Matrix::Identity(d_a(), d_a());
    CVector g = CVector::Zero(psi.size());
    for (const Matrix& k : n.kraus()) {
      const Matrix kk = kron(k, id);
      g.noalias() += kk.adjoint() * (vg.gradient * (kk * psi));
    }
    return {vg.value, 2.0 * g};
  }
};

struct RestartOutcome {
  double value = 0.0;
  CVector psi;
  int iterations = 0;
  bool converged = false;
};

// Removes the radial and global-phase components of v at the unit vector psi.
CVector project_tangent(const CVector& psi, const CVector& v) { return v - psi.dot(v) * psi; }

// Riemannian nonlinear conjugate gradient (Polak-Ribiere+) on the unit sphere
// with Armijo backtracking; falls back to steepest descent whenever the
// conjugate direction is not a descent direction.
RestartOutcome descend(const Objective& f, CVector psi, const OptimizerConfig& opt) {
  psi.normalize();
  auto [val, grad] = f.value_and_gradient(psi, opt);
  CVector tangent = project_tangent(psi, grad);
  CVector dir = -tangent;
  double step = opt.initial_step;
  const int restart_every = 2 * static_cast<int>(psi.size());
  RestartOutcome out;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    const double gnorm2 = tangent.squaredNorm();
    if (gnorm2 < 1e-28) {
      out.converged = true;
      break;
    }
    double slope = dir.dot(tangent).real();
    if (!(slope < 0.0) || it % restart_every == 0) {
      dir = -tangent;
      slope = -gnorm2;
    }
    bool accepted = false;
    double change = 0.0;
    while (step * dir.norm() > 1e-16) {
      const CVector trial = (psi + step * dir).normalized();
      const double v = f.value(trial);
      if (v <= val + 1e-4 * step * slope) {
        change = val - v;
        psi = trial;
        std::tie(val, grad) = f.value_and_gradient(psi, opt);
        const CVector next = project_tangent(psi, grad);
        const double beta =
            std::max(0.0, next.dot(next - project_tangent(psi, tangent)).real() / gnorm2);
        dir = -next + beta * project_tangent(psi, dir);
        tangent = next;
        step = std::min(step * 2.0, 4.0);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || change < opt.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = val;
  out.psi = psi;
  out.iterations = it;
  return out;
}

CVector maximally_entangled(int d) {
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v / std::sqrt(static_cast<double>(d));
}

}  // namespace

std::string_view to_string(EntropyKind k) {
  switch (k) {
    case EntropyKind::von_neumann: return "von_neumann";
    case EntropyKind::renyi: return "renyi";
    case EntropyKind::tsallis: return "tsallis";
  }
  return "?";
}

EntropyKind parse_entropy_kind(std::string_view s) {
  if (s == "von_neumann" || s == "vn") return EntropyKind::von_neumann;
  if (s == "renyi") return EntropyKind::renyi;
  if (s == "tsallis") return EntropyKind::tsallis;
  throw ValidationError("unknown entropy kind '" + std::string(s) + "'");
}

void validate(const EntropySpec& spec) {
  const double a = spec.alpha;
  std::ostringstream os;
  if (spec.kind == EntropyKind::renyi && (!(a >= 0.5) || a == 1.0 || !std::isfinite(a))) {
    os << "Renyi channel entropy needs alpha in [0.5, 1) u (1, inf), got " << a;
    throw ValidationError(os.str());
  }
  if (spec.kind == EntropyKind::tsallis && (!(a > 0.0) || a == 1.0 || !(a < 2.0))) {
    os << "Tsallis channel entropy needs alpha in (0, 1) u (1, 2), got " << a;
    throw ValidationError(os.str());
  }
}

double evaluate_input(const QuantumChannel& n, const EntropySpec& spec, const CVector& psi) {
  validate(spec);
  if (psi.size() != n.dim_in() * n.dim_in()) {
    throw ValidationError("input vector must have dimension dA^2");
  }
  return Objective{n, spec}.value(psi.normalized());
}

ChannelEntropyResult channel_entropy(const QuantumChannel& n, const EntropySpec& spec,
                                     const OptimizerConfig& opt) {
  validate(spec);
  const Objective f{n, spec};
  const int da = n.dim_in();
  const int restarts = std::max(opt.restarts, 1);
  std::vector<RestartOutcome> outcomes(restarts);
  parallel_for(restarts, [&](std::size_t k) {
    CVector start;
    if (k == 0) {
      start = maximally_entangled(da);
    } else if (k == 1) {
      start = CVector::Unit(da * da, 0);
    } else {
      Rng rng = make_rng(derive_seed(opt.seed, k));
      start = haar_vector(da * da, rng);
    }
    outcomes[k] = descend(f, start, opt);
  });

  ChannelEntropyResult r;
  r.certificate.converged = true;
  std::size_t best = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    r.certificate.restart_values.push_back(outcomes[k].value);
    r.certificate.restart_iterations.push_back(outcomes[k].iterations);
    r.certificate.converged = r.certificate.converged && outcomes[k].converged;
    if (outcomes[k].value < outcomes[best].value) best = k;
  }
  r.value = outcomes[best].value;
  r.argmin_input = DensityOperator::pure(outcomes[best].psi, {da, da});
  if (!r.certificate.converged && opt.throw_on_failure) {
    std::ostringstream os;
    os << "channel entropy descent hit the iteration cap; best value " << r.value;
    throw OptimizerError(os.str(), r.value);
  }

  if (spec.kind == EntropyKind::tsallis) {
    // (|B|^{1-a} - 1)/(1-a) - |B|^{1-a} D~T(omega || pi_B (x) omega_R).
    const RenyiOrder order(spec.alpha);
    const double db = n.dim_out();
    const DensityOperator omega = n.extend_apply(r.argmin_input);
    const HermitianOperator omega_r = trace_out_first(omega.op(), n.dim_out(), da);
    const HermitianOperator ref =
        kron(HermitianOperator::identity(n.dim_out()) * (1.0 / db), omega_r);
    const double c = std::pow(db, 1.0 - spec.alpha);
    const double affine =
        (c - 1.0) / (1.0 - spec.alpha) - c * sandwiched_tsallis(omega.op(), ref, order);
    r.certificate.affine_residual = std::abs(affine - r.value);
  }
  return r;
}

double pseudo_additivity_gap(const QuantumChannel& n, const QuantumChannel& m, double alpha,
                             const OptimizerConfig& opt) {
  if (n.dim_in() * m.dim_in() > 9) {
    throw ValidationError("additivity checks support product input dimension <= 9");
  }
  const EntropySpec spec = EntropySpec::tsallis(alpha);
  const double sn = channel_entropy(n, spec, opt).value;
  const double sm = channel_entropy(m, spec, opt).value;
  const double snm = channel_entropy(tensor(n, m), spec, opt).value;
  return snm - (sn + sm + (1.0 - alpha) * sn * sm);
}

double renyi_additivity_gap(const QuantumChannel& n, const QuantumChannel& m, double alpha,
                            const OptimizerConfig& opt) {
  if (n.dim_in() * m.dim_in() > 9) {
    throw ValidationError("additivity checks support product input dimension <= 9");
  }
  const EntropySpec spec = EntropySpec::renyi(alpha);
  const double sn = channel_entropy(n, spec, opt).value;
  const double sm = channel_entropy(m, spec, opt).value;
  const double snm = channel_entropy(tensor(n, m), spec, opt).value;
  return snm - sn - sm;
}

double randomizing_entropy(int d_out, const EntropySpec& spec) {
  validate(spec);
  const double d = d_out;
  if (spec.kind == EntropyKind::tsallis) {
    return (std::pow(d, 1.0 - spec.alpha) - 1.0) / (1.0 - spec.alpha);
  }
  return std::log2(d);
}

}  // namespace entroverify
