#include "rdpg/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rdpg {

double SplitMix64::next_double_open0() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
  if (has_normal_spare_) {
    has_normal_spare_ = false;
    return normal_spare_;
  }
  const double u1 = next_double_open0();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  normal_spare_ = r * std::sin(theta);
  has_normal_spare_ = true;
  return r * std::cos(theta);
}

double SplitMix64::next_gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be > 0");
  if (shape < 1.0) {
    const double u = next_double_open0();
    return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_double_open0();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> SplitMix64::next_dirichlet(
    const std::vector<double>& alpha) {
  std::vector<double> g(alpha.size());
  double total = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    g[i] = next_gamma(alpha[i]);
    total += g[i];
  }
  for (double& v : g) v /= total;
  return g;
}

}  // namespace rdpg
