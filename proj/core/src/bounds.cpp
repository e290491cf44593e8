#include "entroverify/bounds.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "entroverify/error.hpp"

namespace entroverify {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    std::ostringstream os;
    os << "eps must lie in [0, 1], got " << eps;
    throw ValidationError(os.str());
  }
}

void check_dim(int d, int min_d) {
  if (d < min_d) {
    std::ostringstream os;
    os << "dimension must be >= " << min_d << ", got " << d;
    throw ValidationError(os.str());
  }
}

void check_alpha(double alpha, double upper, const char* family) {
  if (!(alpha >= 0.5) || alpha == 1.0 || !(alpha < upper)) {
    std::ostringstream os;
    os << family << " bound needs alpha in [0.5, 1) u (1, " << upper << "), got " << alpha;
    throw ValidationError(os.str());
  }
}

}  // namespace

std::string_view to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::afw: return "afw";
    case BoundFamily::fannes_audenaert: return "fannes_audenaert";
    case BoundFamily::renyi_down: return "renyi_down";
    case BoundFamily::tsallis_down: return "tsallis_down";
    case BoundFamily::marwah_up: return "marwah_up";
  }
  return "?";
}

BoundFamily parse_bound_family(std::string_view s) {
  for (BoundFamily f : {BoundFamily::afw, BoundFamily::fannes_audenaert, BoundFamily::renyi_down,
                        BoundFamily::tsallis_down, BoundFamily::marwah_up}) {
    if (s == to_string(f)) return f;
  }
  throw ValidationError("unknown bound family '" + std::string(s) + "'");
}

MarwahParams::MarwahParams(double a) : alpha(a), beta(a / (2.0 * a - 1.0)) {}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("binary entropy needs p in [0, 1]");
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double afw_bound(double eps, int d) {
  check_eps(eps);
  check_dim(d, 1);
  return 2.0 * eps * std::log2(static_cast<double>(d)) + xlog2x(1.0 + eps) - xlog2x(eps);
}

double fannes_audenaert(double t, int d) {
  check_eps(t);
  check_dim(d, 2);
  return t * std::log2(static_cast<double>(d - 1)) + binary_entropy(t);
}

double renyi_down_bound(double alpha, int d, double eps) {
  check_alpha(alpha, INFINITY, "renyi_down");
  check_eps(eps);
  check_dim(d, 1);
  if (alpha > 1.0) return alpha / (alpha - 1.0) * std::log2(1.0 + eps);
  const double dd = static_cast<double>(d);
  return std::log2(1.0 + eps) +
         std::log2(1.0 + std::pow(eps, alpha) * std::pow(dd, 2.0 * (1.0 - alpha))) / (1.0 - alpha);
}

double tsallis_down_bound(double alpha, int d, double eps) {
  check_alpha(alpha, 2.0, "tsallis_down");
  check_eps(eps);
  check_dim(d, 1);
  const double dd = static_cast<double>(d);
  if (alpha < 1.0) {
    return ((1.0 + std::pow(eps, alpha)) * std::pow(1.0 + eps, 1.0 - alpha) - 1.0) *
           std::pow(dd, 1.0 - alpha) / (1.0 - alpha);
  }
  const double g = std::pow(1.0 + eps, alpha - 1.0);
  return ((g - 1.0) * std::pow(dd, alpha - 1.0) + eps * g * std::pow(dd, 1.0 - alpha)) /
         (alpha - 1.0);
}

double marwah_up_bound(double alpha, int d, double eps) {
  check_alpha(alpha, INFINITY, "marwah_up");
  check_eps(eps);
  check_dim(d, 1);
  double a = alpha;
  double e = eps;
  if (alpha > 1.0) {
    a = MarwahParams(alpha).beta;
    e = std::sqrt(2.0 * eps);
  }
  const double dd = static_cast<double>(d);
  const double inner =
      std::pow(e, a) * std::pow(dd, 2.0 * (1.0 - a)) + 1.0 - e / std::pow(1.0 + e, 1.0 - a);
  return std::log2(1.0 + e) + std::log2(inner) / (1.0 - a);
}

double evaluate(const BoundSpec& s) {
  switch (s.family) {
    case BoundFamily::afw: return afw_bound(s.eps, s.d);
    case BoundFamily::fannes_audenaert: return fannes_audenaert(s.eps, s.d);
    case BoundFamily::renyi_down: return renyi_down_bound(s.alpha, s.d, s.eps);
    case BoundFamily::tsallis_down: return tsallis_down_bound(s.alpha, s.d, s.eps);
    case BoundFamily::marwah_up: return marwah_up_bound(s.alpha, s.d, s.eps);
  }
  throw ValidationError("unknown bound family");
}

}  // namespace entroverify
