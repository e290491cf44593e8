#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "entroverify/divergences.hpp"
#include "entroverify/kernel_gradient.hpp"
#include "entroverify/random.hpp"
#include "entroverify/states.hpp"

namespace ev = entroverify;

namespace {

ev::Matrix random_hermitian_direction(int d, ev::Rng& rng) {
  const ev::Matrix g = ev::ginibre(d, d, rng);
  ev::Matrix h = 0.5 * (g + g.adjoint());
  return h / h.norm();
}

// Central difference of f along e against Tr(G e).
void expect_directional_derivative(const std::function<double(const ev::Matrix&)>& f,
                                   const ev::Matrix& x, const ev::Matrix& grad,
                                   const ev::Matrix& e) {
  const double h = 1e-6;
  const double fd = (f(x + h * e) - f(x - h * e)) / (2.0 * h);
  const double an = (grad * e).trace().real();
  EXPECT_NEAR(an, fd, 1e-6 * (1.0 + std::abs(fd)));
}

}  // namespace

TEST(KernelGradient, ConditionalKernelValueAndDerivative) {
  ev::Rng rng = ev::make_rng(5);
  for (double alpha : {0.5, 0.75, 1.5, 2.5}) {
    for (int trial = 0; trial < 4; ++trial) {
      const ev::Matrix omega = ev::random_density(6, 6, rng).matrix();
      const auto vg = ev::conditional_kernel_gradient(omega, 2, 3, alpha);
      auto q = [&](const ev::Matrix& w) {
        const ev::HermitianOperator op = ev::make_hermitian_unchecked(w);
        const ev::HermitianOperator lift =
            ev::kron(ev::HermitianOperator::identity(2), ev::trace_out_first(op, 2, 3));
        return ev::trace_functional(op, lift, ev::RenyiOrder(alpha));
      };
      EXPECT_NEAR(vg.value, q(omega), 1e-12);
      expect_directional_derivative(q, omega, vg.gradient, random_hermitian_direction(6, rng));
    }
  }
}

TEST(KernelGradient, MarginalKernelValueAndDerivative) {
  ev::Rng rng = ev::make_rng(6);
  for (double alpha : {0.6, 0.9, 1.3, 3.0}) {
    for (int trial = 0; trial < 4; ++trial) {
      const ev::Matrix rho = ev::random_density(6, 4, rng).matrix();
      const ev::Matrix sigma = ev::random_density(3, 3, rng).matrix();
      const auto vg = ev::marginal_kernel_gradient(rho, sigma, 2, 3, alpha);
      auto q = [&](const ev::Matrix& s) {
        const ev::HermitianOperator lift = ev::kron(ev::HermitianOperator::identity(2),
                                                    ev::make_hermitian_unchecked(s));
        return ev::trace_functional(ev::make_hermitian_unchecked(rho), lift,
                                    ev::RenyiOrder(alpha));
      };
      EXPECT_NEAR(vg.value, q(sigma), 1e-12);
      expect_directional_derivative(q, sigma, vg.gradient, random_hermitian_direction(3, rng));
    }
  }
}

TEST(KernelGradient, ConditionalEntropyValueAndDerivative) {
  ev::Rng rng = ev::make_rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ev::Matrix omega = ev::random_density(4, 4, rng).matrix();
    const auto vg = ev::conditional_entropy_gradient(omega, 2, 2);
    auto h = [&](const ev::Matrix& w) {
      const ev::HermitianOperator op = ev::make_hermitian_unchecked(w);
      return ev::von_neumann_entropy(op) - ev::von_neumann_entropy(ev::trace_out_first(op, 2, 2));
    };
    EXPECT_NEAR(vg.value, h(omega), 1e-12);
    expect_directional_derivative(h, omega, vg.gradient, random_hermitian_direction(4, rng));
  }
}
