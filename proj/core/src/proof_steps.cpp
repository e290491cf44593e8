#include <algorithm>
#include <cmath>

#include "entroverify/conditional_entropy.hpp"
#include "entroverify/error.hpp"
#include "entroverify/harness.hpp"
#include "entroverify/random.hpp"
#include "harness_internal.hpp"

namespace entroverify {

namespace {

// Objects shared by both continuity proofs for one sampled pair.
struct ProofObjects {
  double alpha;
  double eps;
  int d_a;
  DeltaBundle delta;
  HermitianOperator omega;
  HermitianOperator omega_gamma;  // (I (x) rho_B)^gamma
};

double kernel(const ProofObjects& o, const HermitianOperator& x) {
  return trace_functional(x, o.omega, RenyiOrder(o.alpha));
}

double sandwich_power(const ProofObjects& o, const HermitianOperator& x, double scale) {
  const HermitianOperator s = x.congruence(o.omega_gamma.matrix()) * scale;
  return trace_power(s, o.alpha);
}

// 2^{(1 - alpha) H~down_alpha(A|B)} through the conditional entropy.
double exp_down(const ProofObjects& o, const BipartiteState& s) {
  return std::exp2((1.0 - o.alpha) * renyi_down(s, RenyiOrder(o.alpha)));
}

double exp_up(const ProofObjects& o, const BipartiteState& s) {
  return std::exp2((1.0 - o.alpha) * renyi_up(s, RenyiOrder(o.alpha)).value);
}

}  // namespace

std::vector<TrialReport> verify_proof_steps(const std::vector<std::string>& step_ids,
                                            const std::vector<double>& alphas,
                                            const std::vector<DimPair>& dims, int trials,
                                            std::uint64_t seed, const Tolerances& tol) {
  const auto& known = proof_step_ids();
  struct Task {
    std::string id;
    double alpha;
    DimPair dims;
    int trial;
  };
  std::vector<Task> tasks;
  if (dims.empty()) throw ValidationError("proof steps need at least one dims entry");
  for (const std::string& id : step_ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw ValidationError("unknown proof step id '" + id + "'");
    }
    std::vector<double> as;
    for (double a : alphas) {
      if (alpha_in_range(id, a)) as.push_back(a);
    }
    if (as.empty()) continue;
    for (int t = 0; t < trials; ++t) {
      const std::size_t na = as.size();
      tasks.push_back({id, as[t % na], dims[(t / na) % dims.size()], t});
    }
  }

  auto base = [&](std::size_t i) {
    const Task& t = tasks[i];
    TrialReport r;
    r.theorem_id = t.id;
    r.alpha = t.alpha;
    r.dims = {t.dims.first, t.dims.second};
    r.seed = derive_seed(detail::cell_seed(seed, t.id, 0), static_cast<std::uint64_t>(t.trial));
    r.eps_upper = detail::kNaN;
    r.bound_lenient = detail::kNaN;
    return r;
  };

  auto body = [&](TrialReport& r, std::size_t i) {
    const Task& t = tasks[i];
    const detail::SampledPair s = detail::sample_pair(t.dims.first, t.dims.second, r.seed, t.trial, false);
    r.method = s.method;
    r.eps = trace_distance(s.rho, s.sigma);
    if (!(r.eps > 1e-12)) {
      r.status = TrialStatus::skip;
      r.pass = true;
      r.note = "delta undefined at epsilon zero";
      return;
    }
    const double a = t.alpha;
    const RenyiOrder order(a);
    const HermitianOperator omega =
        kron(HermitianOperator::identity(t.dims.first), s.rho.marginal_b().op());
    ProofObjects o{a, 0.0, t.dims.first, build_delta(s.rho, s.sigma), omega,
                   frac_power(omega, order.gamma())};
    o.eps = o.delta.eps;
    const double e = o.eps;
    const double da_pow = std::pow(static_cast<double>(o.d_a), 1.0 - a);

    Tolerances used = tol;
    if (t.id == "mccarthy_sub" || t.id == "mccarthy_super") {
      const double x = sandwich_power(o, s.rho.op(), 1.0 / (1.0 + e));
      const double y = sandwich_power(o, o.delta.q.op(), e / (1.0 + e));
      const double xy = kernel(o, o.delta.delta.op());
      if (t.id == "mccarthy_sub") {
        r.lhs_gap = xy;
        r.bound = x + y;
      } else {
        r.lhs_gap = x + y;
        r.bound = xy;
      }
    } else if (t.id == "max_exp_rho") {
      r.lhs_gap = std::abs(kernel(o, s.rho.op()) - exp_down(o, s.rho));
      r.bound = 0.0;
      used = detail::with_abs(tol, tol.equality);
    } else if (t.id == "upper") {
      r.lhs_gap = kernel(o, o.delta.delta.op());
      r.bound = std::pow(1.0 + e, -a) * exp_down(o, s.rho) + std::pow(e / (1.0 + e), a) * da_pow;
    } else if (t.id == "lower") {
      r.lhs_gap = exp_down(o, s.sigma) / (1.0 + e);
      r.bound = kernel(o, o.delta.delta.op());
    } else if (t.id == "upper_greater_one") {
      r.lhs_gap = std::pow(1.0 + e, -a) * exp_down(o, s.rho);
      r.bound = kernel(o, o.delta.delta.op());
    } else if (t.id == "lower_greater_one") {
      r.lhs_gap = kernel(o, o.delta.delta.op());
      r.bound = exp_down(o, s.sigma) / (1.0 + e) + e / (1.0 + e) * da_pow;
    } else if (t.id == "up_exp") {
      r.lhs_gap = kernel(o, o.delta.q.op());
      r.bound = exp_up(o, o.delta.q);
    } else {
      r.lhs_gap = kernel(o, o.delta.p.op());
      r.bound = exp_up(o, o.delta.p);
    }
    finalize(r, used);
  };
  return detail::run_tasks(tasks.size(), base, body);
}

}  // namespace entroverify
