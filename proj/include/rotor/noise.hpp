#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rotor/distance.hpp"

namespace rotor {

struct NoiseSample {
  std::vector<long> m;      // X errors
  std::vector<double> phi;  // Z errors in (-pi, pi]
};

// Density proportional to exp(kappa cos phi), by the Best-Fisher envelope
// rejection method.
double sample_von_mises(double kappa, std::mt19937_64& rng);
// P(m) = (1 - p)/(1 + p) p^|m|, drawn as the difference of two geometric
// variables.
long sample_two_sided_geometric(double p, std::mt19937_64& rng);

// exp(-sin^2(phi/2)/sigma^2) is a von Mises density with kappa = 1/(2 sigma^2).
double von_mises_kappa(double sigma);

// i.i.d. per rotor; reproducible for a fixed seed.
NoiseSample sample_noise(const WeightModel& model, std::size_t n, std::uint64_t seed);

// I_1(kappa) / I_0(kappa).
double bessel_ratio(double kappa);

}  // namespace rotor
