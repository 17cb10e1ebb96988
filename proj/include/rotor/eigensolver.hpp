#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <vector>

namespace rotor {

struct Spectrum {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // one column per value
  std::vector<double> residuals;
  double norm_bound = 0.0;     // max absolute row sum of H
  bool dense = false;

  // Every residual |H v - lambda v| below tol * norm_bound.
  bool validated(double tol = 1e-8) const;
};

// The k lowest eigenpairs of a real symmetric matrix. Dense solve up to
// kDenseLimit, block Lanczos with full reorthogonalisation above. Deterministic
// for a fixed seed.
Spectrum low_spectrum(const Eigen::SparseMatrix<double>& h, std::size_t k, std::uint64_t seed = 1);
Spectrum dense_spectrum(const Eigen::MatrixXd& h, std::size_t k);

}  // namespace rotor
