#include "rotor/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rotor {

namespace {
double uniform_open(std::mt19937_64& rng) {
  // (0, 1): avoids log(0) in the acceptance test
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}
}  // namespace

double sample_von_mises(double kappa, std::mt19937_64& rng) {
  constexpr double pi = std::numbers::pi;
  if (kappa < 1e-8) return pi * (2.0 * uniform_open(rng) - 1.0);
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  for (;;) {
    const double u1 = uniform_open(rng), u2 = uniform_open(rng), u3 = uniform_open(rng);
    const double z = std::cos(pi * u1);
    const double f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
      const double theta = std::acos(std::clamp(f, -1.0, 1.0));
      return u3 > 0.5 ? theta : -theta;
    }
  }
}

long sample_two_sided_geometric(double p, std::mt19937_64& rng) {
  if (p <= 0.0) return 0;
  std::geometric_distribution<long> g(1.0 - p);
  return g(rng) - g(rng);
}

double von_mises_kappa(double sigma) { return 1.0 / (2.0 * sigma * sigma); }

NoiseSample sample_noise(const WeightModel& model, std::size_t n, std::uint64_t seed) {
  model.validate();
  std::mt19937_64 rng(seed);
  const double kappa = von_mises_kappa(model.sigma);
  NoiseSample s;
  s.phi.reserve(n);
  s.m.reserve(n);
  for (std::size_t j = 0; j < n; ++j) s.phi.push_back(sample_von_mises(kappa, rng));
  for (std::size_t j = 0; j < n; ++j) s.m.push_back(sample_two_sided_geometric(model.p_jump, rng));
  return s;
}

double bessel_ratio(double kappa) {
  if (kappa < 0) return -bessel_ratio(-kappa);
  if (kappa == 0) return 0.0;
  // r_v = I_{v+1} / I_v satisfies r_v = 1 / (2 (v + 1) / kappa + r_{v+1});
  // the backward recurrence is stable and avoids overflowing I_0.
  const long terms = 60 + 2 * static_cast<long>(std::ceil(kappa));
  double r = 0.0;
  for (long v = terms; v >= 0; --v) r = 1.0 / (2.0 * static_cast<double>(v + 1) / kappa + r);
  return r;
}

}  // namespace rotor
