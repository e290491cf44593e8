#pragma once

// Quantum channels in Kraus form and distances between them.
//
// The Choi matrix is (N (x) id)(|Omega><Omega|) with |Omega> = sum_i |ii>/sqrt(dA),
// ordered output (x) input, so it has unit trace.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "entroverify/operator.hpp"

namespace entroverify {

inline constexpr double kTracePreservingTol = 1e-9;

class QuantumChannel {
 public:
  QuantumChannel() = default;
  /// Every operator must be d_out x d_in and sum K^dagger K = I within `tol`.
  explicit QuantumChannel(std::vector<Matrix> kraus, double tol = kTracePreservingTol);

  int dim_in() const { return d_in_; }
  int dim_out() const { return d_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const HermitianOperator& choi() const { return choi_; }

  DensityOperator apply(const DensityOperator& rho) const;
  /// rho on (dA, dR) -> (N (x) id_R)(rho) on (dB, dR).
  DensityOperator extend_apply(const DensityOperator& rho) const;
  /// Heisenberg picture on an arbitrary output operator: sum K^dagger X K.
  Matrix adjoint_apply(const Matrix& x) const;

 private:
  std::vector<Matrix> kraus_;
  HermitianOperator choi_;
  int d_in_ = 0;
  int d_out_ = 0;
};

/// Unit-trace Choi matrix of a Kraus family (no trace-preservation check).
HermitianOperator kraus_to_choi(std::span<const Matrix> kraus, int d_in, int d_out);
/// Minimal Kraus family from a unit-trace Choi matrix (eigenvalues below
/// 1e-12 * lambda_max are dropped).
std::vector<Matrix> choi_to_kraus(const HermitianOperator& choi, int d_in, int d_out);
QuantumChannel channel_from_choi(const HermitianOperator& choi, int d_in, int d_out);

QuantumChannel identity_channel(int d);
/// rho -> Tr(rho) pi_B.
QuantumChannel randomizing(int d_in, int d_out);
/// rho -> Tr(rho) sigma.
QuantumChannel replacer(const DensityOperator& sigma, int d_in);
/// (1 - p) id + p randomizing.
QuantumChannel depolarizing(int d, double p);
/// Qubit channel sum_i p_i sigma_i rho sigma_i with (I, X, Y, Z).
QuantumChannel pauli_channel(const std::array<double, 4>& p);
/// Stinespring dilation of a Haar unitary with environment dimension d_in * d_out.
QuantumChannel random_channel(int d_in, int d_out, std::uint64_t seed);

QuantumChannel tensor(const QuantumChannel& n, const QuantumChannel& m);
/// (1 - p) n + p m, returned in minimal Kraus form.
QuantumChannel mixture(const QuantumChannel& n, const QuantumChannel& m, double p);

struct DiamondBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool converged = false;
  int iterations = 0;
};

struct DiamondOptions {
  /// Bracket width at which the solver stops.
  double tolerance = 1e-7;
  int seesaw_restarts = 32;
  int max_iterations = 100000;
  std::uint64_t seed = 0xd1a;
  /// Report (1/2)||N - M|| (default) or the raw norm.
  bool halved = true;
};

/// Certified bracket on the diamond distance. The lower end comes from
/// explicit inputs, the upper end from a dual-feasible certificate.
DiamondBracket diamond_distance(const QuantumChannel& n, const QuantumChannel& m,
                                const DiamondOptions& opt = {});

/// Halved induced trace distance without ancilla (seesaw lower estimate).
double channel_trace_distance(const QuantumChannel& n, const QuantumChannel& m,
                              int restarts = 32, std::uint64_t seed = 0x7d);

}  // namespace entroverify
