#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "entroverify/harness.hpp"
#include "entroverify/states.hpp"

namespace entroverify::detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SampledPair {
  BipartiteState rho;
  BipartiteState sigma;
  std::string method;
};

/// Equal-marginal pair; methods alternate with the trial index. With
/// allow_general every third trial mixes rho with an unrelated random state.
SampledPair sample_pair(int d_a, int d_b, std::uint64_t seed, int trial, bool allow_general);

std::uint64_t cell_seed(std::uint64_t seed, const std::string& id, std::uint64_t cell);

/// Runs every task (in parallel), times it and turns exceptions into failed
/// reports carrying the message. `base` pre-fills identifying fields.
std::vector<TrialReport> run_tasks(std::size_t n, const std::function<TrialReport(std::size_t)>& base,
                                   const std::function<void(TrialReport&, std::size_t)>& body);

inline Tolerances with_abs(Tolerances t, double abs) {
  t.abs = abs;
  t.rel = 0.0;
  return t;
}

}  // namespace entroverify::detail
