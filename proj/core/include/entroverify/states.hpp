#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "entroverify/operator.hpp"
#include "entroverify/random.hpp"

namespace entroverify {

/// Density operator on A (x) B.
class BipartiteState {
 public:
  BipartiteState() = default;
  /// Requires state.dims() to have exactly two entries.
  explicit BipartiteState(DensityOperator state);
  BipartiteState(const HermitianOperator& op, int d_a, int d_b);

  const DensityOperator& state() const { return state_; }
  operator const DensityOperator&() const { return state_; }  // NOLINT
  const HermitianOperator& op() const { return state_.op(); }
  int dim_a() const { return state_.dims()[0]; }
  int dim_b() const { return state_.dims()[1]; }

  DensityOperator marginal_a() const;
  DensityOperator marginal_b() const;

 private:
  DensityOperator state_;
};

/// Objects from the mixture construction used in the equal-marginal
/// continuity argument: rho - sigma = eps * (p - q) with p, q states, and
/// delta = (rho + eps q) / (1 + eps) = (sigma + eps p) / (1 + eps).
struct DeltaBundle {
  BipartiteState delta;
  BipartiteState p;
  BipartiteState q;
  double eps = 0.0;
};

enum class MarginalMethod { local_channel, mixture };

std::string_view to_string(MarginalMethod m);
MarginalMethod parse_marginal_method(std::string_view s);

DensityOperator random_pure(int d, std::uint64_t seed);
DensityOperator random_pure(int d, Rng& rng);

/// Ginibre-induced measure: G G^dagger / Tr with G of shape d x rank.
DensityOperator random_density(int d, int rank, std::uint64_t seed);
DensityOperator random_density(int d, int rank, Rng& rng);

/// Pure state on (d, d) whose second factor traces out to rho.
DensityOperator purify(const DensityOperator& rho);

/// Sigma with the same B marginal as rho.
///
/// local_channel: sigma = (Phi_A (x) id_B)(rho) where Phi_A has Stinespring
///   unitary W^strength (W random, environment dimension dA^2), so strength 0
///   is the identity channel.
/// mixture: sigma = (1 - strength) rho + strength tau, tau obtained by a
///   random channel C -> A applied to the canonical purification of rho_B.
BipartiteState equal_marginal_partner(const BipartiteState& rho, MarginalMethod method,
                                      double strength, Rng& rng);

/// Samples rho (Ginibre, uniformly random rank) and an equal-marginal partner.
std::pair<BipartiteState, BipartiteState> equal_marginal_pair(int d_a, int d_b,
                                                              MarginalMethod method,
                                                              double strength,
                                                              std::uint64_t seed);

/// Throws ValidationError("delta undefined at epsilon zero") when rho == sigma.
DeltaBundle build_delta(const BipartiteState& rho, const BipartiteState& sigma);

}  // namespace entroverify
