#include <algorithm>
#include <cmath>
#include <random>

#include "entroverify/channels.hpp"
#include "entroverify/conditional_entropy.hpp"
#include "entroverify/error.hpp"
#include "entroverify/harness.hpp"
#include "entroverify/random.hpp"
#include "harness_internal.hpp"

namespace entroverify {

namespace {

constexpr double kLimitOffset = 1e-4;
constexpr double kLimitTol = 1e-2;
constexpr double kExactTol = 1e-10;
constexpr double kUpDualityTol = 1e-6;

DensityOperator random_mixed(int d, Rng& rng) {
  const int rank = std::uniform_int_distribution<int>(1, d)(rng);
  return random_density(d, rank, rng);
}

double tsallis_scaled(double d_t, double c, double a) {
  return (std::pow(c, 1.0 - a) - 1.0) / (a - 1.0) + std::pow(c, 1.0 - a) * d_t;
}

}  // namespace

std::vector<TrialReport> verify_identities(const std::vector<std::string>& ids,
                                           const std::vector<double>& alphas,
                                           const std::vector<DimPair>& dims, int trials,
                                           std::uint64_t seed, const Tolerances& tol) {
  const auto& known = identity_ids();
  if (dims.empty()) throw ValidationError("identities need at least one dims entry");
  struct Task {
    std::string id;
    double alpha;
    std::size_t cell;
    int trial;
  };
  std::vector<Task> tasks;
  for (const std::string& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw ValidationError("unknown identity id '" + id + "'");
    }
    std::vector<double> as;
    if (id.rfind("limit_", 0) == 0) {
      as.push_back(detail::kNaN);
    } else {
      for (double a : alphas) {
        if (alpha_in_range(id, a)) as.push_back(a);
      }
    }
    for (std::size_t c = 0; c < as.size(); ++c) {
      for (int t = 0; t < trials; ++t) tasks.push_back({id, as[c], c, t});
    }
  }

  auto base = [&](std::size_t i) {
    const Task& t = tasks[i];
    TrialReport r;
    r.theorem_id = t.id;
    r.alpha = t.alpha;
    const DimPair d = dims[static_cast<std::size_t>(t.trial) % dims.size()];
    r.dims = {d.first, d.second};
    r.seed = derive_seed(detail::cell_seed(seed, t.id, t.cell), static_cast<std::uint64_t>(t.trial));
    r.method = "random";
    r.eps = detail::kNaN;
    r.eps_upper = detail::kNaN;
    r.bound_lenient = detail::kNaN;
    return r;
  };

  auto body = [&](TrialReport& r, std::size_t i) {
    const std::string& id = tasks[i].id;
    const int da = r.dims[0];
    const int db = r.dims[1];
    const double a = r.alpha;
    Rng rng = make_rng(r.seed);
    Tolerances used = detail::with_abs(tol, tol.equality);
    r.bound = 0.0;

    if (id == "duality" || id == "renyi_up_duality") {
      r.dims = {da, db, db};
      const DensityOperator psi = random_pure(da * db * db, rng).with_dims({da, db, db});
      if (id == "duality") {
        r.lhs_gap = std::abs(duality_gap(psi, RenyiOrder(a)));
      } else {
        r.lhs_gap = std::abs(renyi_up_duality_gap(psi, RenyiOrder(a)));
        used = detail::with_abs(tol, kUpDualityTol);
      }
    } else if (id == "scaling_renyi" || id == "scaling_tsallis") {
      const int d = da * db;
      const DensityOperator rho = random_mixed(d, rng);
      const DensityOperator sigma = random_density(d, d, rng);
      const double c = std::exp2(std::uniform_real_distribution<double>(-3.0, 3.0)(rng));
      const RenyiOrder order(a);
      const HermitianOperator scaled = sigma.op() * c;
      double direct = 0.0;
      double formula = 0.0;
      if (id == "scaling_renyi") {
        direct = sandwiched_renyi(rho, scaled, order);
        formula = sandwiched_renyi(rho, sigma, order) - std::log2(c);
      } else {
        direct = sandwiched_tsallis(rho, scaled, order);
        formula = tsallis_scaled(sandwiched_tsallis(rho, sigma, order), c, a);
      }
      r.lhs_gap = std::abs(direct - formula);
      used = detail::with_abs(tol, kExactTol * (1.0 + std::abs(formula)));
    } else if (id == "dpi_renyi" || id == "dpi_tsallis") {
      const DensityOperator rho = random_mixed(da, rng);
      const DensityOperator sigma = random_density(da, da, rng);
      const QuantumChannel n = random_channel(da, db, derive_seed(r.seed, 7));
      const RenyiOrder order(a);
      auto div = [&](const HermitianOperator& x, const HermitianOperator& y) {
        return id == "dpi_renyi" ? sandwiched_renyi(x, y, order) : sandwiched_tsallis(x, y, order);
      };
      r.lhs_gap = div(n.apply(rho), n.apply(sigma));
      r.bound = div(rho, sigma);
      used = detail::with_abs(tol, tol.equality);
    } else if (id == "limit_renyi" || id == "limit_tsallis") {
      const int d = da * db;
      const DensityOperator rho = random_mixed(d, rng);
      const DensityOperator sigma = random_density(d, d, rng);
      const double target = relative_entropy(rho, sigma) * (id == "limit_renyi" ? 1.0 : std::log(2.0));
      double worst = 0.0;
      for (double s : {-1.0, 1.0}) {
        const RenyiOrder order(1.0 + s * kLimitOffset);
        const double v = id == "limit_renyi" ? sandwiched_renyi(rho, sigma, order)
                                             : sandwiched_tsallis(rho, sigma, order);
        worst = std::max(worst, std::abs(v - target));
      }
      r.lhs_gap = worst;
      used = detail::with_abs(tol, kLimitTol);
    } else if (id == "limit_conditional") {
      const BipartiteState rho(random_mixed(da * db, rng).with_dims({da, db}));
      const double h = cond_entropy(rho);
      double worst = 0.0;
      for (double s : {-1.0, 1.0}) {
        worst = std::max(worst, std::abs(renyi_down(rho, RenyiOrder(1.0 + s * kLimitOffset)) - h));
      }
      r.lhs_gap = worst;
      used = detail::with_abs(tol, kLimitTol);
    } else if (id == "entropy_rel_t") {
      const int d = da * db;
      const DensityOperator rho = random_mixed(d, rng);
      const RenyiOrder order(a);
      const double top = (std::pow(static_cast<double>(d), 1.0 - a) - 1.0) / (1.0 - a);
      const double s_t = tsallis_entropy(rho, order);
      const double affine =
          top - std::pow(static_cast<double>(d), 1.0 - a) *
                    sandwiched_tsallis(rho, DensityOperator::maximally_mixed(d), order);
      const double scale = 1.0 + std::abs(top);
      const double bracket = std::max({0.0, -s_t - kExactTol * scale, s_t - top - kExactTol * scale});
      r.lhs_gap = std::max(std::abs(s_t - affine), bracket);
      used = detail::with_abs(tol, kExactTol * scale);
    } else if (id == "renyi_chain") {
      const QuantumChannel n = random_channel(da, db, derive_seed(r.seed, 7));
      const DensityOperator psi = random_pure(da * da, rng).with_dims({da, da});
      const DensityOperator omega = n.extend_apply(psi);
      const RenyiOrder order(a);
      const double conditional = renyi_down(BipartiteState(omega), order);
      const HermitianOperator omega_r = trace_out_first(omega.op(), db, da);
      const HermitianOperator ref =
          kron(HermitianOperator::identity(db) * (1.0 / db), omega_r);
      const double absorbed = std::log2(static_cast<double>(db)) - sandwiched_renyi(omega, ref, order);
      r.lhs_gap = std::abs(conditional - absorbed);
      used = detail::with_abs(tol, kExactTol * (1.0 + std::abs(absorbed)));
    } else {
      const DensityOperator rho = random_mixed(da, rng);
      const DensityOperator sigma = random_mixed(db, rng);
      const RenyiOrder order(a);
      const double sr = tsallis_entropy(rho, order);
      const double ss = tsallis_entropy(sigma, order);
      const double joint = tsallis_entropy(kron(rho.op(), sigma.op()), order);
      const double formula = sr + ss + (1.0 - a) * sr * ss;
      r.lhs_gap = std::abs(joint - formula);
      used = detail::with_abs(tol, kExactTol * (1.0 + std::abs(formula)));
    }
    finalize(r, used);
  };
  return detail::run_tasks(tasks.size(), base, body);
}

}  // namespace entroverify
