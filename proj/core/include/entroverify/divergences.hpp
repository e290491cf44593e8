#pragma once

// Relative entropies. All logarithms are base 2. Second arguments may be
// unnormalized PSD operators (I_A (x) rho_B is the common case); no
// normalization is ever applied silently.

#include <limits>

#include "entroverify/operator.hpp"

namespace entroverify {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
/// supp rho is contained in supp sigma when ||(I - P_sigma) P_rho|| <= this.
inline constexpr double kSupportInclusionTol = 1e-8;

/// Order alpha in (0, 1) u (1, inf) with the sandwich exponent
/// gamma = (1 - alpha) / (2 alpha).
class RenyiOrder {
 public:
  explicit RenyiOrder(double alpha);

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }

 private:
  double alpha_;
  double gamma_;
};

bool support_contained(const HermitianOperator& rho, const HermitianOperator& sigma);

/// Umegaki D(rho||sigma) = Tr rho (log rho - log sigma); +inf on support violation.
double relative_entropy(const HermitianOperator& rho, const HermitianOperator& sigma);

/// Tr{(sigma^gamma rho sigma^gamma)^alpha}.
double trace_functional(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order);

double sandwiched_renyi(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order);
double sandwiched_tsallis(const HermitianOperator& rho, const HermitianOperator& sigma,
                          RenyiOrder order);
/// Non-sandwiched Tsallis divergence (Tr{rho^alpha sigma^{1-alpha}} - 1) / (alpha - 1).
double tsallis_relative(const HermitianOperator& rho, const HermitianOperator& sigma,
                        RenyiOrder order);

/// (Tr rho^alpha - 1) / (1 - alpha).
double tsallis_entropy(const HermitianOperator& rho, RenyiOrder order);
/// log Tr rho^alpha / (1 - alpha).
double renyi_entropy(const HermitianOperator& rho, RenyiOrder order);

/// Tsallis kernel <-> divergence: (q - 1) / (alpha - 1), +inf stays +inf.
double tsallis_from_kernel(double kernel, RenyiOrder order);
/// log2(q) / (alpha - 1), with q == 0 mapped to +inf.
double renyi_from_kernel(double kernel, RenyiOrder order);

}  // namespace entroverify
