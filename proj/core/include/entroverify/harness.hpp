#pragma once

// Monte-Carlo falsification harness. Each check materializes as a
// TrialReport; a trial passes iff lhs_gap <= bound + abs + rel * |bound|.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "entroverify/channel_entropy.hpp"
#include "entroverify/optimizer.hpp"

namespace entroverify {

struct Tolerances {
  double abs = 1e-9;
  double rel = 1e-9;
  /// Budget for equality identities (|gap| <= equality).
  double equality = 1e-8;
  /// Diamond brackets wider than this make a channel trial inconclusive.
  double inconclusive_width = 1e-3;
};

enum class TrialStatus { pass, fail, skip, inconclusive };
std::string_view to_string(TrialStatus s);

struct TrialReport {
  std::string theorem_id;
  std::uint64_t seed = 0;
  /// NaN when the check has no order parameter.
  double alpha = 0.0;
  std::vector<int> dims;
  std::string method;
  double eps = 0.0;
  double lhs_gap = 0.0;
  double bound = 0.0;
  /// lhs_gap / bound, 0 when bound == 0.
  double tightness = 0.0;
  bool pass = false;
  TrialStatus status = TrialStatus::fail;
  /// Channel trials: upper bracket end and the bound evaluated there. NaN otherwise.
  double eps_upper = 0.0;
  double bound_lenient = 0.0;
  std::string note;
  double elapsed_seconds = 0.0;
};

bool within_bound(double lhs, double bound, const Tolerances& tol);

/// Fills tightness, pass and status from lhs_gap and bound.
void finalize(TrialReport& r, const Tolerances& tol);

using DimPair = std::pair<int, int>;

/// Continuity theorem ids: afw, renyi_lt1, renyi_gt1, tsallis_lt1,
/// tsallis_gt1, marwah_up.
const std::vector<std::string>& continuity_theorem_ids();
/// Proof-step ids: mccarthy_sub, mccarthy_super, max_exp_rho, upper, lower,
/// upper_greater_one, lower_greater_one, up_exp, up_exp_greater_one.
const std::vector<std::string>& proof_step_ids();
/// channel_vn, channel_renyi, channel_tsallis.
const std::vector<std::string>& channel_theorem_ids();
/// duality, renyi_up_duality, scaling_renyi, scaling_tsallis, dpi_renyi,
/// dpi_tsallis, limit_renyi, limit_tsallis, limit_conditional,
/// entropy_rel_t, renyi_chain, pseudo_additivity_states.
const std::vector<std::string>& identity_ids();

/// True when alpha is inside the order range of the given check
/// (checks without an order accept any alpha).
bool alpha_in_range(const std::string& id, double alpha);

/// One report per (alpha in range, dims, trial). afw ignores alpha and runs
/// one cell per dims entry.
std::vector<TrialReport> verify_conditional_continuity(const std::string& theorem_id,
                                                       const std::vector<double>& alphas,
                                                       const std::vector<DimPair>& dims,
                                                       int trials_per_cell, std::uint64_t seed,
                                                       const Tolerances& tol = {});

/// Chained inequalities of the continuity proofs on the actual proof objects.
/// Each id gets `trials` instances; alpha and dims cycle through the grids
/// (alphas outside a step's regime are ignored for that step).
std::vector<TrialReport> verify_proof_steps(const std::vector<std::string>& step_ids,
                                            const std::vector<double>& alphas,
                                            const std::vector<DimPair>& dims, int trials,
                                            std::uint64_t seed, const Tolerances& tol = {});

struct ChannelContinuityOptions {
  OptimizerConfig optimizer = channel_optimizer_defaults();
  DiamondOptions diamond;
  /// Mixing weights p of the pairs (N, (1 - p) N + p K), cycled per trial.
  std::vector<double> mix_grid = {0.01, 0.03, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0};
};

/// kind in {channel_vn, channel_renyi, channel_tsallis}. Pairs are
/// (N, (1 - p) N + p K) with N, K random channels of dims (dIn, dOut).
/// Strict reading: pass iff |dS| <= bound(eps_lower).
std::vector<TrialReport> verify_channel_continuity(const std::string& kind,
                                                   const std::vector<double>& alphas,
                                                   const std::vector<DimPair>& dims, int trials,
                                                   std::uint64_t seed, const Tolerances& tol = {},
                                                   const ChannelContinuityOptions& opt = {});

std::vector<TrialReport> verify_identities(const std::vector<std::string>& identity_ids,
                                           const std::vector<double>& alphas,
                                           const std::vector<DimPair>& dims, int trials,
                                           std::uint64_t seed, const Tolerances& tol = {});

struct CampaignConfig {
  std::vector<std::string> theorem_ids;
  std::vector<double> alpha_grid;
  std::vector<DimPair> dims_grid;
  int trials = 0;
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

/// Parses {theorem_ids, alpha_grid, dims_grid, trials, seed, tolerances}.
/// Throws ValidationError on malformed content, unknown ids, or an alpha
/// equal to 1 (outside every order range).
CampaignConfig parse_campaign_config(const std::string& json_text);
CampaignConfig load_campaign_config(const std::string& path);

struct TheoremSummary {
  std::string theorem_id;
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int inconclusive = 0;
  double max_tightness = 0.0;
};

struct CampaignResult {
  std::vector<TrialReport> reports;
  std::vector<TheoremSummary> summaries;
  int failed() const;
};

/// Group ids "proof_steps" and "identities" expand to every member.
CampaignResult run_campaign(const CampaignConfig& config);

std::vector<TheoremSummary> summarize(const std::vector<TrialReport>& reports);

/// Fixed header; elapsed time is appended only when include_timing is set so
/// that default output is byte-identical across runs.
void write_csv(std::ostream& os, const std::vector<TrialReport>& reports,
               bool include_timing = false);
void write_jsonl(std::ostream& os, const std::vector<TrialReport>& reports,
                 bool include_timing = false);
std::string summary_line(const TheoremSummary& s);

}  // namespace entroverify
