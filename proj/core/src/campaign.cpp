#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "entroverify/error.hpp"
#include "entroverify/harness.hpp"
#include "entroverify/io.hpp"

namespace entroverify {

namespace {

using nlohmann::json;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

bool known_id(const std::string& id) {
  return id == "proof_steps" || id == "identities" || contains(continuity_theorem_ids(), id) ||
         contains(proof_step_ids(), id) || contains(channel_theorem_ids(), id) ||
         contains(identity_ids(), id);
}

std::string dims_label(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(dims[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double x) { return std::isnan(x) ? "" : format_number(x); }

}  // namespace

CampaignConfig parse_campaign_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("campaign config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("campaign config must be a JSON object");
  static const std::set<std::string> allowed = {"theorem_ids", "alpha_grid", "dims_grid",
                                                "trials",      "seed",       "tolerances"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ValidationError("campaign config: unknown field '" + it.key() + "'");
    }
  }
  CampaignConfig c;
  try {
    c.theorem_ids = j.at("theorem_ids").get<std::vector<std::string>>();
    c.alpha_grid = j.value("alpha_grid", std::vector<double>{});
    for (const json& d : j.at("dims_grid")) {
      const auto v = d.get<std::vector<int>>();
      if (v.size() != 2) throw ValidationError("campaign config: dims_grid entries must be [dA, dB]");
      c.dims_grid.emplace_back(v[0], v[1]);
    }
    c.trials = j.at("trials").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerances")) {
      const json& t = j["tolerances"];
      c.tolerances.abs = t.value("abs", c.tolerances.abs);
      c.tolerances.rel = t.value("rel", c.tolerances.rel);
      c.tolerances.equality = t.value("equality", c.tolerances.equality);
      c.tolerances.inconclusive_width =
          t.value("inconclusive_width", c.tolerances.inconclusive_width);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("campaign config: ") + e.what());
  }
  if (c.trials < 0) throw ValidationError("campaign config: trials must be >= 0");
  if (c.dims_grid.empty()) throw ValidationError("campaign config: dims_grid is empty");
  for (const DimPair& d : c.dims_grid) {
    if (d.first < 1 || d.second < 1) {
      throw ValidationError("campaign config: dimensions must be positive");
    }
  }
  for (const std::string& id : c.theorem_ids) {
    if (!known_id(id)) throw ValidationError("campaign config: unknown theorem id '" + id + "'");
  }
  for (double a : c.alpha_grid) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      std::ostringstream os;
      os << "campaign config: alpha " << a << " is not a positive finite order";
      throw ValidationError(os.str());
    }
    if (a == 1.0) {
      std::string named = "every order-dependent theorem";
      for (const std::string& id : c.theorem_ids) {
        if (id != "afw" && id != "channel_vn") {
          named = id;
          break;
        }
      }
      throw ValidationError("campaign config: alpha = 1 is outside the order range of " + named +
                            " (alpha must differ from 1)");
    }
  }
  return c;
}

CampaignConfig load_campaign_config(const std::string& path) {
  return parse_campaign_config(read_text(path));
}

int CampaignResult::failed() const {
  int n = 0;
  for (const TheoremSummary& s : summaries) n += s.failed;
  return n;
}

std::vector<TheoremSummary> summarize(const std::vector<TrialReport>& reports) {
  std::vector<TheoremSummary> out;
  std::map<std::string, std::size_t> index;
  for (const TrialReport& r : reports) {
    auto it = index.find(r.theorem_id);
    if (it == index.end()) {
      it = index.emplace(r.theorem_id, out.size()).first;
      out.push_back({r.theorem_id});
    }
    TheoremSummary& s = out[it->second];
    ++s.total;
    switch (r.status) {
      case TrialStatus::pass: ++s.passed; break;
      case TrialStatus::fail: ++s.failed; break;
      case TrialStatus::skip: ++s.skipped; break;
      case TrialStatus::inconclusive: ++s.inconclusive; break;
    }
    if (r.status == TrialStatus::pass || r.status == TrialStatus::fail) {
      if (std::isfinite(r.tightness)) s.max_tightness = std::max(s.max_tightness, r.tightness);
    }
  }
  return out;
}

CampaignResult run_campaign(const CampaignConfig& c) {
  CampaignResult result;
  auto append = [&](std::vector<TrialReport> more) {
    result.reports.insert(result.reports.end(), std::make_move_iterator(more.begin()),
                          std::make_move_iterator(more.end()));
  };
  for (const std::string& id : c.theorem_ids) {
    if (contains(continuity_theorem_ids(), id)) {
      append(verify_conditional_continuity(id, c.alpha_grid, c.dims_grid, c.trials, c.seed,
                                           c.tolerances));
    } else if (contains(channel_theorem_ids(), id)) {
      append(verify_channel_continuity(id, c.alpha_grid, c.dims_grid, c.trials, c.seed,
                                       c.tolerances));
    } else if (id == "proof_steps" || contains(proof_step_ids(), id)) {
      const std::vector<std::string> steps = id == "proof_steps" ? proof_step_ids()
                                                                 : std::vector<std::string>{id};
      append(verify_proof_steps(steps, c.alpha_grid, c.dims_grid, c.trials, c.seed, c.tolerances));
    } else {
      const std::vector<std::string> ids = id == "identities" ? identity_ids()
                                                              : std::vector<std::string>{id};
      append(verify_identities(ids, c.alpha_grid, c.dims_grid, c.trials, c.seed, c.tolerances));
    }
  }
  result.summaries = summarize(result.reports);
  return result;
}

void write_csv(std::ostream& os, const std::vector<TrialReport>& reports, bool include_timing) {
  os << "theorem_id,seed,alpha,dims,method,eps,lhs_gap,bound,tightness,pass,status,eps_upper,"
        "bound_lenient,note";
  if (include_timing) os << ",elapsed_seconds";
  os << "\n";
  for (const TrialReport& r : reports) {
    os << csv_field(r.theorem_id) << ',' << r.seed << ',' << csv_number(r.alpha) << ','
       << dims_label(r.dims) << ',' << csv_field(r.method) << ',' << csv_number(r.eps) << ','
       << csv_number(r.lhs_gap) << ',' << csv_number(r.bound) << ',' << csv_number(r.tightness)
       << ',' << (r.pass ? "true" : "false") << ',' << to_string(r.status) << ','
       << csv_number(r.eps_upper) << ',' << csv_number(r.bound_lenient) << ','
       << csv_field(r.note);
    if (include_timing) os << ',' << format_number(r.elapsed_seconds);
    os << "\n";
  }
}

void write_jsonl(std::ostream& os, const std::vector<TrialReport>& reports, bool include_timing) {
  for (const TrialReport& r : reports) {
    os << "{\"theorem_id\": " << json(r.theorem_id).dump() << ", \"seed\": " << r.seed
       << ", \"alpha\": " << json_number(r.alpha) << ", \"dims\": " << json(r.dims).dump()
       << ", \"method\": " << json(r.method).dump() << ", \"eps\": " << json_number(r.eps)
       << ", \"lhs_gap\": " << json_number(r.lhs_gap) << ", \"bound\": " << json_number(r.bound)
       << ", \"tightness\": " << json_number(r.tightness)
       << ", \"pass\": " << (r.pass ? "true" : "false") << ", \"status\": \""
       << to_string(r.status) << "\", \"eps_upper\": " << json_number(r.eps_upper)
       << ", \"bound_lenient\": " << json_number(r.bound_lenient)
       << ", \"note\": " << json(r.note).dump();
    if (include_timing) os << ", \"elapsed_seconds\": " << json_number(r.elapsed_seconds);
    os << "}\n";
  }
}

std::string summary_line(const TheoremSummary& s) {
  std::ostringstream os;
  os << s.theorem_id << ": " << s.total << " trials, " << s.passed << " passed, " << s.failed
     << " failed, " << s.skipped << " skipped, " << s.inconclusive
     << " inconclusive, max tightness " << format_number(s.max_tightness);
  return os.str();
}

}  // namespace entroverify
