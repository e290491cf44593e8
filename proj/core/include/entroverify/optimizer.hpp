#pragma once

#include <cstdint>

namespace entroverify {

enum class GradientMode { analytic, central_difference };

/// Settings shared by the marginal (sigma_B) and channel-input optimizers.
struct OptimizerConfig {
  int restarts = 5;
  int max_iterations = 5000;
  /// Stop once successive objective values differ by less than this.
  double tolerance = 1e-10;
  double initial_step = 1.0;
  GradientMode gradient = GradientMode::analytic;
  double fd_step = 1e-6;
  /// sigma <- (1 - interior) sigma + interior * pi keeps iterates full rank.
  double interior = 1e-9;
  std::uint64_t seed = 0x5eed;
  /// When false, non-convergence is only flagged in the result.
  bool throw_on_failure = true;
};

/// Defaults for optimizing over purified channel inputs.
inline OptimizerConfig channel_optimizer_defaults() {
  OptimizerConfig c;
  c.restarts = 32;
  c.max_iterations = 3000;
  c.tolerance = 1e-12;
  c.initial_step = 0.25;
  c.throw_on_failure = false;
  return c;
}

}  // namespace entroverify
