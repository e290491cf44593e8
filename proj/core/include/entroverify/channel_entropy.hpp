#pragma once

// Channel entropies as infima of conditional entropies of the channel output
// over pure inputs psi_AR with dR = dA:
//   von_neumann  inf H(B|R)
//   renyi        inf H~down_alpha(B|R)
//   tsallis      inf T~down_alpha(B|R)
// The returned value is the smallest objective found, hence an upper bound on
// the infimum.

#include <string>
#include <string_view>
#include <vector>

#include "entroverify/channels.hpp"
#include "entroverify/optimizer.hpp"

namespace entroverify {

enum class EntropyKind { von_neumann, renyi, tsallis };

std::string_view to_string(EntropyKind k);
EntropyKind parse_entropy_kind(std::string_view s);

struct EntropySpec {
  EntropyKind kind = EntropyKind::von_neumann;
  /// Ignored for von_neumann. renyi: [1/2, 1) u (1, inf); tsallis: (0, 2) minus 1.
  double alpha = 0.5;

  static EntropySpec von_neumann() { return {EntropyKind::von_neumann, 1.0}; }
  static EntropySpec renyi(double a) { return {EntropyKind::renyi, a}; }
  static EntropySpec tsallis(double a) { return {EntropyKind::tsallis, a}; }
};

/// Throws ValidationError when alpha is outside the kind's range.
void validate(const EntropySpec& spec);

struct DescentCertificate {
  /// Final objective of each restart, in restart order.
  std::vector<double> restart_values;
  std::vector<int> restart_iterations;
  /// Every restart stopped on the tolerance rather than the iteration cap.
  bool converged = false;
  /// Tsallis only: |conditional form - affine divergence form| at the argmin.
  double affine_residual = 0.0;
};

struct ChannelEntropyResult {
  double value = 0.0;
  /// Pure state on (dA, dA).
  DensityOperator argmin_input;
  DescentCertificate certificate;
};

/// Objective at a fixed pure input psi (unit vector of dimension dA^2).
double evaluate_input(const QuantumChannel& n, const EntropySpec& spec, const CVector& psi);

ChannelEntropyResult channel_entropy(const QuantumChannel& n, const EntropySpec& spec,
                                     const OptimizerConfig& opt = channel_optimizer_defaults());

/// S~T(N (x) M) - [S~T(N) + S~T(M) + (1 - alpha) S~T(N) S~T(M)].
double pseudo_additivity_gap(const QuantumChannel& n, const QuantumChannel& m, double alpha,
                             const OptimizerConfig& opt = channel_optimizer_defaults());
/// S~(N (x) M) - S~(N) - S~(M).
double renyi_additivity_gap(const QuantumChannel& n, const QuantumChannel& m, double alpha,
                            const OptimizerConfig& opt = channel_optimizer_defaults());

/// Closed forms used for normalization checks: log|B| for randomizing
/// channels in every kind, and the Tsallis analogue (|B|^{1-a} - 1)/(1 - a).
double randomizing_entropy(int d_out, const EntropySpec& spec);

}  // namespace entroverify
