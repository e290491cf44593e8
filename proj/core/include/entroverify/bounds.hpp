#pragma once

// Closed-form continuity bounds, in bits. Every family is 0 at eps = 0 and
// uses 0 log 0 = 0. Parameters outside a family's range raise
// ValidationError rather than being clamped.

#include <string_view>

namespace entroverify {

enum class BoundFamily { afw, fannes_audenaert, renyi_down, tsallis_down, marwah_up };

std::string_view to_string(BoundFamily f);
BoundFamily parse_bound_family(std::string_view s);

struct BoundSpec {
  BoundFamily family = BoundFamily::afw;
  /// Ignored by afw and fannes_audenaert.
  double alpha = 0.5;
  int d = 2;
  double eps = 0.0;
};

/// Conjugate order for the alpha > 1 branch of marwah_up: 1/alpha + 1/beta = 2.
struct MarwahParams {
  explicit MarwahParams(double alpha);
  double alpha;
  double beta;
};

/// Binary entropy s2(p) = -p log p - (1-p) log(1-p).
double binary_entropy(double p);

/// 2 eps log d + (1+eps) log(1+eps) - eps log eps.
double afw_bound(double eps, int d);
/// T log(d-1) + s2(T); requires d >= 2.
double fannes_audenaert(double t, int d);
/// alpha in [1/2, 1): log(1+eps) + log(1 + eps^alpha d^{2(1-alpha)}) / (1-alpha).
/// alpha > 1: alpha/(alpha-1) log(1+eps), independent of d.
double renyi_down_bound(double alpha, int d, double eps);
/// alpha in [1/2, 1) u (1, 2).
double tsallis_down_bound(double alpha, int d, double eps);
/// alpha in [1/2, 1) u (1, inf); the alpha > 1 branch is evaluated at beta
/// and sqrt(2 eps).
double marwah_up_bound(double alpha, int d, double eps);

double evaluate(const BoundSpec& spec);

}  // namespace entroverify
