#include "entroverify/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "entroverify/bounds.hpp"
#include "entroverify/conditional_entropy.hpp"
#include "entroverify/divergences.hpp"
#include "entroverify/error.hpp"
#include "entroverify/parallel.hpp"
#include "entroverify/random.hpp"
#include "harness_internal.hpp"

namespace entroverify {

namespace detail {

SampledPair sample_pair(int d_a, int d_b, std::uint64_t seed, int trial, bool allow_general) {
  Rng rng = make_rng(seed);
  const int d = d_a * d_b;
  const double strength = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const int rank = std::uniform_int_distribution<int>(1, d)(rng);
  BipartiteState rho(random_density(d, rank, rng).with_dims({d_a, d_b}));
  if (allow_general && trial % 3 == 2) {
    const DensityOperator tau = random_density(d, d, rng);
    const HermitianOperator mix = rho.op() * (1.0 - strength) + tau.op() * strength;
    BipartiteState sigma(DensityOperator(mix, {d_a, d_b}));
    return {std::move(rho), std::move(sigma), "general"};
  }
  const MarginalMethod m = trial % 2 == 0 ? MarginalMethod::local_channel : MarginalMethod::mixture;
  BipartiteState sigma = equal_marginal_partner(rho, m, strength, rng);
  return {std::move(rho), std::move(sigma), std::string(to_string(m))};
}

std::uint64_t cell_seed(std::uint64_t seed, const std::string& id, std::uint64_t cell) {
  return derive_seed(seed, hash_label(id), cell);
}

std::vector<TrialReport> run_tasks(std::size_t n, const std::function<TrialReport(std::size_t)>& base,
                                   const std::function<void(TrialReport&, std::size_t)>& body) {
  std::vector<TrialReport> out(n);
  parallel_for(n, [&](std::size_t i) {
    TrialReport r = base(i);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r, i);
    } catch (const std::exception& e) {
      r.status = TrialStatus::fail;
      r.pass = false;
      r.note = e.what();
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out[i] = std::move(r);
  });
  return out;
}

}  // namespace detail

using detail::kNaN;

std::string_view to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::pass: return "pass";
    case TrialStatus::fail: return "fail";
    case TrialStatus::skip: return "skip";
    case TrialStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool within_bound(double lhs, double bound, const Tolerances& tol) {
  if (std::isnan(lhs) || std::isnan(bound)) return false;
  if (std::isinf(bound) && bound > 0) return true;
  return lhs <= bound + tol.abs + tol.rel * std::abs(bound);
}

void finalize(TrialReport& r, const Tolerances& tol) {
  r.tightness = r.bound == 0.0 ? 0.0 : r.lhs_gap / r.bound;
  r.pass = within_bound(r.lhs_gap, r.bound, tol);
  r.status = r.pass ? TrialStatus::pass : TrialStatus::fail;
}

const std::vector<std::string>& continuity_theorem_ids() {
  static const std::vector<std::string> ids = {"afw",         "renyi_lt1",   "renyi_gt1",
                                               "tsallis_lt1", "tsallis_gt1", "marwah_up"};
  return ids;
}

const std::vector<std::string>& proof_step_ids() {
  static const std::vector<std::string> ids = {
      "mccarthy_sub", "mccarthy_super",    "max_exp_rho",       "upper",
      "lower",        "upper_greater_one", "lower_greater_one", "up_exp",
      "up_exp_greater_one"};
  return ids;
}

const std::vector<std::string>& channel_theorem_ids() {
  static const std::vector<std::string> ids = {"channel_vn", "channel_renyi", "channel_tsallis"};
  return ids;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "duality",     "renyi_up_duality", "scaling_renyi",     "scaling_tsallis",
      "dpi_renyi",   "dpi_tsallis",      "limit_renyi",       "limit_tsallis",
      "limit_conditional", "entropy_rel_t", "renyi_chain", "pseudo_additivity_states"};
  return ids;
}

bool alpha_in_range(const std::string& id, double a) {
  const bool lt1 = a >= 0.5 && a < 1.0;
  const bool gt1 = a > 1.0 && std::isfinite(a);
  if (id == "renyi_lt1" || id == "tsallis_lt1") return lt1;
  if (id == "renyi_gt1") return gt1;
  if (id == "tsallis_gt1") return a > 1.0 && a < 2.0;
  if (id == "marwah_up" || id == "channel_renyi") return lt1 || gt1;
  if (id == "channel_tsallis") return lt1 || (a > 1.0 && a < 2.0);
  if (id == "mccarthy_sub" || id == "upper" || id == "lower" || id == "up_exp") return lt1;
  if (id == "mccarthy_super" || id == "upper_greater_one" || id == "lower_greater_one" ||
      id == "up_exp_greater_one") {
    return gt1;
  }
  if (id == "max_exp_rho") return lt1 || gt1;
  if (id == "duality") return a > 0.0 && a < 2.0 && a != 1.0;
  if (id == "renyi_up_duality") return a > 0.5 && a != 1.0 && std::isfinite(a);
  if (id == "dpi_renyi" || id == "dpi_tsallis") return lt1 || gt1;
  if (id == "renyi_chain") return lt1 || gt1;
  if (id == "scaling_renyi" || id == "scaling_tsallis" || id == "entropy_rel_t" ||
      id == "pseudo_additivity_states") {
    return a > 0.0 && a != 1.0 && std::isfinite(a);
  }
  // afw, channel_vn and the limit checks have no order parameter.
  return true;
}

namespace {

bool has_order(const std::string& id) {
  return id != "afw" && id != "channel_vn" && id.rfind("limit_", 0) != 0;
}

std::vector<double> cell_alphas(const std::string& id, const std::vector<double>& alphas) {
  if (!has_order(id)) return {kNaN};
  std::vector<double> out;
  for (double a : alphas) {
    if (alpha_in_range(id, a)) out.push_back(a);
  }
  return out;
}

double clamp_eps(double eps) { return std::clamp(eps, 0.0, 1.0); }

}  // namespace

std::vector<TrialReport> verify_conditional_continuity(const std::string& id,
                                                       const std::vector<double>& alphas,
                                                       const std::vector<DimPair>& dims,
                                                       int trials, std::uint64_t seed,
                                                       const Tolerances& tol) {
  const auto& known = continuity_theorem_ids();
  if (std::find(known.begin(), known.end(), id) == known.end()) {
    throw ValidationError("unknown continuity theorem id '" + id + "'");
  }
  const std::vector<double> cells_a = cell_alphas(id, alphas);
  const std::size_t per_cell = static_cast<std::size_t>(std::max(trials, 0));
  const std::size_t n = cells_a.size() * dims.size() * per_cell;

  auto base = [&](std::size_t i) {
    const std::size_t cell = i / per_cell;
    TrialReport r;
    r.theorem_id = id;
    r.alpha = cells_a[cell / dims.size()];
    const DimPair d = dims[cell % dims.size()];
    r.dims = {d.first, d.second};
    r.seed = derive_seed(detail::cell_seed(seed, id, cell), static_cast<std::uint64_t>(i % per_cell));
    r.eps_upper = kNaN;
    r.bound_lenient = kNaN;
    return r;
  };

  auto body = [&](TrialReport& r, std::size_t i) {
    const int trial = static_cast<int>(i % per_cell);
    const int da = r.dims[0];
    const int db = r.dims[1];
    const detail::SampledPair s = detail::sample_pair(da, db, r.seed, trial, id == "afw");
    r.method = s.method;
    r.eps = trace_distance(s.rho, s.sigma);
    const double eps = clamp_eps(r.eps);
    if (id == "afw") {
      r.lhs_gap = std::abs(cond_entropy(s.rho) - cond_entropy(s.sigma));
      r.bound = afw_bound(eps, da);
    } else {
      const RenyiOrder order(r.alpha);
      if (id == "renyi_lt1" || id == "renyi_gt1") {
        r.lhs_gap = std::abs(renyi_down(s.rho, order) - renyi_down(s.sigma, order));
        r.bound = renyi_down_bound(r.alpha, da, eps);
      } else if (id == "tsallis_lt1" || id == "tsallis_gt1") {
        r.lhs_gap =
            std::abs(tsallis_down_sandwiched(s.rho, order) - tsallis_down_sandwiched(s.sigma, order));
        r.bound = tsallis_down_bound(r.alpha, da, eps);
      } else {
        r.lhs_gap = std::abs(renyi_up(s.rho, order).value - renyi_up(s.sigma, order).value);
        r.bound = marwah_up_bound(r.alpha, da, eps);
      }
    }
    finalize(r, tol);
  };
  return detail::run_tasks(n, base, body);
}

std::vector<TrialReport> verify_channel_continuity(const std::string& kind,
                                                   const std::vector<double>& alphas,
                                                   const std::vector<DimPair>& dims, int trials,
                                                   std::uint64_t seed, const Tolerances& tol,
                                                   const ChannelContinuityOptions& opt) {
  const auto& known = channel_theorem_ids();
  if (std::find(known.begin(), known.end(), kind) == known.end()) {
    throw ValidationError("unknown channel theorem id '" + kind + "'");
  }
  if (opt.mix_grid.empty()) throw ValidationError("channel continuity needs a mixing grid");
  std::vector<DimPair> cells_d;
  for (const DimPair& d : dims) {
    if (d.first <= 3 && d.second <= 3) cells_d.push_back(d);
  }
  const std::vector<double> cells_a = cell_alphas(kind, alphas);
  const std::size_t per_cell = static_cast<std::size_t>(std::max(trials, 0));
  const std::size_t n = cells_a.size() * cells_d.size() * per_cell;

  auto base = [&](std::size_t i) {
    const std::size_t cell = i / per_cell;
    const std::size_t trial = i % per_cell;
    TrialReport r;
    r.theorem_id = kind;
    r.alpha = cells_a[cell / cells_d.size()];
    const DimPair d = cells_d[cell % cells_d.size()];
    r.dims = {d.first, d.second};
    r.seed = derive_seed(detail::cell_seed(seed, kind, cell), trial);
    std::ostringstream m;
    m << "interpolate p=" << opt.mix_grid[trial % opt.mix_grid.size()];
    r.method = m.str();
    r.eps_upper = kNaN;
    r.bound_lenient = kNaN;
    return r;
  };

  auto body = [&](TrialReport& r, std::size_t i) {
    const int din = r.dims[0];
    const int dout = r.dims[1];
    const double p = opt.mix_grid[(i % per_cell) % opt.mix_grid.size()];
    const QuantumChannel n = random_channel(din, dout, derive_seed(r.seed, 1));
    const QuantumChannel k = random_channel(din, dout, derive_seed(r.seed, 2));
    const QuantumChannel m = mixture(n, k, p);
    const DiamondBracket br = diamond_distance(n, m, opt.diamond);
    r.eps = br.lower;
    r.eps_upper = br.upper;

    EntropySpec spec = EntropySpec::von_neumann();
    if (kind == "channel_renyi") spec = EntropySpec::renyi(r.alpha);
    if (kind == "channel_tsallis") spec = EntropySpec::tsallis(r.alpha);
    auto bound_at = [&](double eps) {
      eps = clamp_eps(eps);
      if (spec.kind == EntropyKind::von_neumann) return afw_bound(eps, dout);
      if (spec.kind == EntropyKind::renyi) return renyi_down_bound(r.alpha, dout, eps);
      return tsallis_down_bound(r.alpha, dout, eps);
    };
    r.bound = bound_at(br.lower);
    r.bound_lenient = bound_at(br.upper);
    if (br.upper - br.lower > tol.inconclusive_width) {
      r.status = TrialStatus::inconclusive;
      r.pass = false;
      std::ostringstream os;
      os << "diamond bracket width " << (br.upper - br.lower);
      r.note = os.str();
      return;
    }
    OptimizerConfig oc = opt.optimizer;
    oc.seed = derive_seed(r.seed, 3);
    const ChannelEntropyResult sn = channel_entropy(n, spec, oc);
    const ChannelEntropyResult sm = channel_entropy(m, spec, oc);
    r.lhs_gap = std::abs(sn.value - sm.value);
    finalize(r, tol);
    if (!sn.certificate.converged || !sm.certificate.converged) {
      r.note = "entropy descent hit the iteration cap";
    }
  };
  return detail::run_tasks(n, base, body);
}

}  // namespace entroverify
