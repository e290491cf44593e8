#pragma once

// Conditional entropies of bipartite states, in bits.
//
//   cond_entropy            H(A|B) = S(AB) - S(B)
//   renyi_down / renyi_up   sandwiched Renyi, conditioning on rho_B / optimized sigma_B
//   tsallis_*_sandwiched    same kernel, power form
//   tsallis_down_plain      -D^T_alpha(rho || I (x) rho_B) (non-sandwiched)
//   tsallis_up_plain_closed closed-form optimum of the non-sandwiched version

#include "entroverify/divergences.hpp"
#include "entroverify/optimizer.hpp"
#include "entroverify/states.hpp"

namespace entroverify {

struct MarginalOptimum {
  double value = 0.0;
  /// Minimizing sigma_B of the divergence.
  DensityOperator argmin;
  bool converged = false;
  int iterations = 0;
};

double cond_entropy(const BipartiteState& rho);

/// Tr{(rho_B^gamma rho rho_B^gamma)^alpha} with rho_B acting as I_A (x) rho_B.
double conditional_kernel(const BipartiteState& rho, RenyiOrder order);

double renyi_down(const BipartiteState& rho, RenyiOrder order);
MarginalOptimum renyi_up(const BipartiteState& rho, RenyiOrder order,
                         const OptimizerConfig& opt = {});

double tsallis_down_sandwiched(const BipartiteState& rho, RenyiOrder order);
MarginalOptimum tsallis_up_sandwiched(const BipartiteState& rho, RenyiOrder order,
                                      const OptimizerConfig& opt = {});

double tsallis_down_plain(const BipartiteState& rho, RenyiOrder order);
/// Requires alpha in (0, 1) u (1, 2).
double tsallis_up_plain_closed(const BipartiteState& rho, RenyiOrder order);

/// D^T_alpha(rho || I_A (x) sigma_B); used to cross-check the closed form.
double plain_tsallis_to_marginal(const BipartiteState& rho, const HermitianOperator& sigma_b,
                                 RenyiOrder order);
/// D~_alpha(rho || I_A (x) sigma_B).
double sandwiched_renyi_to_marginal(const BipartiteState& rho, const HermitianOperator& sigma_b,
                                    RenyiOrder order);

/// T_alpha(A|B) + T_{2-alpha}(A|C) for a pure state on (A, B, C).
/// Requires alpha in (0, 2) and a pure input (purity within 1e-10).
double duality_gap(const DensityOperator& pure_abc, RenyiOrder order);

/// H~up_alpha(A|B) + H~up_beta(A|C) with 1/alpha + 1/beta = 2, alpha > 1/2.
double renyi_up_duality_gap(const DensityOperator& pure_abc, RenyiOrder order,
                            const OptimizerConfig& opt = {});

}  // namespace entroverify
