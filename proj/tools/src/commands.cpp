#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "entroverify/bounds.hpp"
#include "entroverify/channel_entropy.hpp"
#include "entroverify/divergences.hpp"
#include "entroverify/error.hpp"
#include "entroverify/harness.hpp"
#include "entroverify/io.hpp"
#include "entroverify/states.hpp"

namespace entroverify::cli {

namespace {

// Multiplier taking a value in bits to the requested base.
double log_scale(const std::string& base) { return base == "e" ? std::log(2.0) : 1.0; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

double require_alpha(const std::optional<double>& alpha, const std::string& what) {
  if (!alpha) throw ValidationError("--alpha is required for " + what);
  return *alpha;
}

void emit(std::ostream& out, const std::string& json_text, const std::string& path) {
  if (path.empty()) {
    out << json_text << "\n";
  } else {
    write_text(path, json_text + "\n");
  }
}

struct DivergenceArgs {
  std::string kind;
  std::optional<double> alpha;
  std::string rho;
  std::string sigma;
  std::string log_base = "2";
};

int cmd_divergence(const DivergenceArgs& a, std::ostream& out) {
  const DensityOperator rho = load_state(a.rho);
  const DensityOperator sigma = load_state(a.sigma);
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("rho and sigma must have the same dimension");
  }
  double value = 0.0;
  bool logarithmic = true;
  if (a.kind == "umegaki") {
    value = relative_entropy(rho, sigma);
  } else {
    const RenyiOrder order(require_alpha(a.alpha, "kind " + a.kind));
    if (a.kind == "renyi") {
      value = sandwiched_renyi(rho, sigma, order);
    } else if (a.kind == "tsallis-sandwiched") {
      value = sandwiched_tsallis(rho, sigma, order);
      logarithmic = false;
    } else {
      value = tsallis_relative(rho, sigma, order);
      logarithmic = false;
    }
  }
  if (logarithmic) value *= log_scale(a.log_base);
  const double alpha = a.kind == "umegaki" ? std::numeric_limits<double>::quiet_NaN()
                                           : a.alpha.value_or(0.0);
  out << "{\"kind\": " << quoted(a.kind) << ", \"alpha\": " << json_number(alpha)
      << ", \"value\": " << json_number(value) << "}\n";
  return kOk;
}

struct ChannelEntropyArgs {
  std::string channel;
  std::string kind;
  std::optional<double> alpha;
  int restarts = 32;
  std::uint64_t seed = 0x5eed;
  std::string log_base = "2";
};

int cmd_channel_entropy(const ChannelEntropyArgs& a, std::ostream& out) {
  const QuantumChannel n = load_channel(a.channel);
  EntropySpec spec = EntropySpec::von_neumann();
  if (a.kind == "renyi") spec = EntropySpec::renyi(require_alpha(a.alpha, "kind renyi"));
  if (a.kind == "tsallis") spec = EntropySpec::tsallis(require_alpha(a.alpha, "kind tsallis"));
  if (a.restarts < 1) throw ValidationError("--restarts must be at least 1");
  OptimizerConfig opt = channel_optimizer_defaults();
  opt.restarts = a.restarts;
  opt.seed = a.seed;
  const ChannelEntropyResult r = channel_entropy(n, spec, opt);
  double value = r.value;
  if (spec.kind != EntropyKind::tsallis) value *= log_scale(a.log_base);
  const double alpha =
      spec.kind == EntropyKind::von_neumann ? std::numeric_limits<double>::quiet_NaN() : spec.alpha;
  out << "{\"kind\": " << quoted(a.kind) << ", \"alpha\": " << json_number(alpha)
      << ", \"value\": " << json_number(value)
      << ", \"argmin_input\": " << state_to_json(r.argmin_input)
      << ", \"converged\": " << (r.certificate.converged ? "true" : "false")
      << ", \"restarts\": " << opt.restarts << "}\n";
  return kOk;
}

struct VerifyArgs {
  std::string config;
  std::string out_dir;
  std::optional<int> trials;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  CampaignConfig cfg = load_campaign_config(a.config);
  if (a.trials) {
    if (*a.trials < 0) throw ValidationError("--trials must be >= 0");
    cfg.trials = *a.trials;
  }
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + a.out_dir + "': " + ec.message());
  const CampaignResult result = run_campaign(cfg);

  const std::filesystem::path dir(a.out_dir);
  std::ostringstream csv;
  write_csv(csv, result.reports, a.timing);
  write_text((dir / "report.csv").string(), csv.str());
  std::ostringstream jsonl;
  write_jsonl(jsonl, result.reports, a.timing);
  write_text((dir / "report.jsonl").string(), jsonl.str());
  std::ostringstream summary;
  for (const TheoremSummary& s : result.summaries) summary << summary_line(s) << "\n";
  write_text((dir / "summary.txt").string(), summary.str());
  err << summary.str();

  out << "{\"trials\": " << result.reports.size() << ", \"failed\": " << result.failed()
      << ", \"report_csv\": " << quoted((dir / "report.csv").string())
      << ", \"report_jsonl\": " << quoted((dir / "report.jsonl").string()) << ", \"summaries\": [";
  for (std::size_t i = 0; i < result.summaries.size(); ++i) {
    const TheoremSummary& s = result.summaries[i];
    out << (i ? ", " : "") << "{\"theorem_id\": " << quoted(s.theorem_id)
        << ", \"total\": " << s.total << ", \"passed\": " << s.passed
        << ", \"failed\": " << s.failed << ", \"skipped\": " << s.skipped
        << ", \"inconclusive\": " << s.inconclusive
        << ", \"max_tightness\": " << json_number(s.max_tightness) << "}";
  }
  out << "]}\n";
  return result.failed() > 0 ? kFailedTrials : kOk;
}

struct BoundArgs {
  std::string family;
  std::optional<double> alpha;
  int dim = 2;
  double eps = 0.0;
  std::string log_base = "2";
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  BoundSpec spec;
  spec.family = parse_bound_family(a.family);
  spec.d = a.dim;
  spec.eps = a.eps;
  const bool needs_alpha =
      spec.family != BoundFamily::afw && spec.family != BoundFamily::fannes_audenaert;
  if (needs_alpha) spec.alpha = require_alpha(a.alpha, "family " + a.family);
  double value = evaluate(spec);
  if (spec.family != BoundFamily::tsallis_down) value *= log_scale(a.log_base);
  out << "{\"family\": " << quoted(a.family)
      << ", \"alpha\": " << json_number(needs_alpha ? spec.alpha : std::numeric_limits<double>::quiet_NaN())
      << ", \"dim\": " << a.dim << ", \"eps\": " << json_number(a.eps)
      << ", \"value\": " << json_number(value) << "}\n";
  return kOk;
}

struct MakeStateArgs {
  std::string kind = "random";
  std::vector<int> dims = {2};
  std::optional<int> rank;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_make_state(const MakeStateArgs& a, std::ostream& out) {
  int d = 1;
  for (int x : a.dims) {
    if (x < 1) throw ValidationError("--dims entries must be positive");
    d *= x;
  }
  DensityOperator rho;
  if (a.kind == "maximally-mixed") {
    rho = DensityOperator::maximally_mixed(a.dims);
  } else if (a.kind == "pure") {
    rho = random_pure(d, a.seed).with_dims(a.dims);
  } else {
    rho = random_density(d, a.rank.value_or(d), a.seed).with_dims(a.dims);
  }
  emit(out, state_to_json(rho), a.out);
  return kOk;
}

struct MakeChannelArgs {
  std::string kind = "random";
  int din = 2;
  std::optional<int> dout;
  double p = 0.0;
  std::vector<double> probs;
  std::string state;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_make_channel(const MakeChannelArgs& a, std::ostream& out) {
  const int dout = a.dout.value_or(a.din);
  QuantumChannel n;
  if (a.kind == "identity") {
    n = identity_channel(a.din);
  } else if (a.kind == "randomizing") {
    n = randomizing(a.din, dout);
  } else if (a.kind == "depolarizing") {
    n = depolarizing(a.din, a.p);
  } else if (a.kind == "pauli") {
    if (a.probs.size() != 4) throw ValidationError("--probs needs four Pauli probabilities");
    n = pauli_channel({a.probs[0], a.probs[1], a.probs[2], a.probs[3]});
  } else if (a.kind == "replacer") {
    if (a.state.empty()) throw ValidationError("--state is required for kind replacer");
    n = replacer(load_state(a.state), a.din);
  } else {
    n = random_channel(a.din, dout, a.seed);
  }
  emit(out, channel_to_json(n), a.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy, divergence and continuity-bound toolkit"};
  app.name("entroverify");
  app.require_subcommand(1);

  DivergenceArgs div;
  auto* sdiv = app.add_subcommand("divergence", "Divergence between two state files");
  sdiv->add_option("--kind", div.kind, "Divergence family")
      ->required()
      ->check(CLI::IsMember({"umegaki", "renyi", "tsallis-sandwiched", "tsallis"}));
  sdiv->add_option("--alpha", div.alpha, "Order (renyi and tsallis kinds)");
  sdiv->add_option("--rho", div.rho, "First state file")->required();
  sdiv->add_option("--sigma", div.sigma, "Second state file")->required();
  sdiv->add_option("--log-base", div.log_base, "Logarithm base of the output")->check(CLI::IsMember({"2", "e"}));

  ChannelEntropyArgs ce;
  auto* sce = app.add_subcommand("channel-entropy", "Entropy of a channel file");
  sce->add_option("--channel", ce.channel, "Channel file")->required();
  sce->add_option("--kind", ce.kind, "Entropy family")->required()->check(CLI::IsMember({"vn", "renyi", "tsallis"}));
  sce->add_option("--alpha", ce.alpha, "Order (renyi and tsallis kinds)");
  sce->add_option("--restarts", ce.restarts, "Optimizer restarts (default 32)");
  sce->add_option("--seed", ce.seed, "Seed for the random restarts");
  sce->add_option("--log-base", ce.log_base, "Logarithm base of the output")->check(CLI::IsMember({"2", "e"}));

  VerifyArgs ver;
  auto* sver = app.add_subcommand("verify", "Run a verification campaign");
  sver->add_option("--config", ver.config, "Campaign config JSON")->required();
  sver->add_option("--out", ver.out_dir, "Report directory (created if missing)")->required();
  sver->add_option("--trials", ver.trials, "Override the trials count of the config");
  sver->add_flag("--timing", ver.timing, "Add per-trial elapsed time to the reports");

  BoundArgs bd;
  auto* sbd = app.add_subcommand("bound", "Evaluate a continuity bound");
  sbd->add_option("--family", bd.family, "Bound family")
      ->required()
      ->check(CLI::IsMember({"afw", "fannes_audenaert", "renyi_down", "tsallis_down", "marwah_up"}));
  sbd->add_option("--alpha", bd.alpha, "Order (all families except afw, fannes_audenaert)");
  sbd->add_option("--dim", bd.dim, "Dimension of A (default 2)");
  sbd->add_option("--eps", bd.eps, "Trace distance in [0, 1]")->required();
  sbd->add_option("--log-base", bd.log_base, "Logarithm base of the output")->check(CLI::IsMember({"2", "e"}));

  MakeStateArgs ms;
  auto* sms = app.add_subcommand("make-state", "Write a state file");
  sms->add_option("--kind", ms.kind, "State family")->check(CLI::IsMember({"random", "pure", "maximally-mixed"}));
  sms->add_option("--dims", ms.dims, "Subsystem dimensions, e.g. 2,2")->delimiter(',');
  sms->add_option("--rank", ms.rank, "Rank of a random state (default full)");
  sms->add_option("--seed", ms.seed, "Sampling seed");
  sms->add_option("--out", ms.out, "Output file (stdout when omitted)");

  MakeChannelArgs mc;
  auto* smc = app.add_subcommand("make-channel", "Write a channel file");
  smc->add_option("--kind", mc.kind, "Channel family")
      ->check(CLI::IsMember(
          {"identity", "randomizing", "depolarizing", "pauli", "replacer", "random"}));
  smc->add_option("--din", mc.din, "Input dimension");
  smc->add_option("--dout", mc.dout, "Output dimension");
  smc->add_option("--p", mc.p, "Depolarizing probability");
  smc->add_option("--probs", mc.probs, "Pauli probabilities p0,p1,p2,p3")->delimiter(',');
  smc->add_option("--state", mc.state, "Replacement state file");
  smc->add_option("--seed", mc.seed, "Sampling seed");
  smc->add_option("--out", mc.out, "Output file (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (sdiv->parsed()) return cmd_divergence(div, out);
    if (sce->parsed()) return cmd_channel_entropy(ce, out);
    if (sver->parsed()) return cmd_verify(ver, out, err);
    if (sbd->parsed()) return cmd_bound(bd, out);
    if (sms->parsed()) return cmd_make_state(ms, out);
    if (smc->parsed()) return cmd_make_channel(mc, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const OptimizerError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace entroverify::cli
