#pragma once

// Value and Hermitian gradient of the sandwiched trace functional
//   Q = Tr{(S X S)^alpha},  S = I (x) M^gamma,
// with respect to either the sandwiched operator (including the dependence
// of M on its marginal) or the conditioning operator M alone. Gradients
// use the Daleckii-Krein formula for the fractional power; they are the
// matrices G with dQ = Tr(G dX) for Hermitian perturbations.

#include "entroverify/operator.hpp"

namespace entroverify {

struct ValueAndGradient {
  double value = 0.0;
  Matrix gradient;
};

/// omega on B (x) R, M = Tr_B omega. Gradient with respect to omega.
ValueAndGradient conditional_kernel_gradient(const Matrix& omega, int d_b, int d_r, double alpha);

/// rho on A (x) B fixed, M = sigma_b. Gradient with respect to sigma_b.
ValueAndGradient marginal_kernel_gradient(const Matrix& rho, const Matrix& sigma_b, int d_a,
                                          int d_b, double alpha);

/// H(B|R) = S(omega) - S(omega_R) in bits, gradient with respect to omega
/// (logarithms on the support).
ValueAndGradient conditional_entropy_gradient(const Matrix& omega, int d_b, int d_r);

}  // namespace entroverify
