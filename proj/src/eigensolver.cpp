#include "rotor/eigensolver.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rotor/simulator.hpp"

namespace rotor {

bool Spectrum::validated(double tol) const {
  for (double r : residuals)
    if (!(r <= tol * std::max(norm_bound, 1e-300))) return false;
  return true;
}

namespace {

double row_sum_norm(const Eigen::SparseMatrix<double>& h) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(h.rows());
  for (Eigen::Index c = 0; c < h.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, c); it; ++it) sums[it.row()] += std::abs(it.value());
  return sums.size() ? sums.maxCoeff() : 0.0;
}

void fill_residuals(Spectrum& s, const Eigen::SparseMatrix<double>& h) {
  s.residuals.clear();
  for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) {
    Eigen::VectorXd v = s.vectors.col(j);
    s.residuals.push_back((h * v - s.values[static_cast<std::size_t>(j)] * v).norm());
  }
}

// Block Krylov iteration with full reorthogonalisation: the basis starts
// from b random vectors, so eigenvalues of multiplicity up to b are found;
// m basis vectors are kept.
Spectrum lanczos(const Eigen::SparseMatrix<double>& h, std::size_t k, std::size_t m, std::uint64_t seed) {
  const Eigen::Index n = h.rows();
  m = std::min<std::size_t>(m, static_cast<std::size_t>(n));
  const std::size_t block = std::min<std::size_t>(std::max<std::size_t>(k, 2), 8);
  Eigen::MatrixXd Q(n, static_cast<Eigen::Index>(m));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::size_t used = 0;
  auto append = [&](Eigen::VectorXd w) {
    for (int pass = 0; pass < 2; ++pass) {
      if (used == 0) break;
      Eigen::VectorXd coef = Q.leftCols(static_cast<Eigen::Index>(used)).transpose() * w;
      w -= Q.leftCols(static_cast<Eigen::Index>(used)) * coef;
    }
    const double b = w.norm();
    if (b < 1e-10) return false;
    Q.col(static_cast<Eigen::Index>(used++)) = w / b;
    return true;
  };
  auto random_vector = [&]() {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
  };
  for (std::size_t i = 0; i < block && used < m; ++i) append(random_vector());
  for (std::size_t next = 0; used < m; ++next) {
    // expand from the oldest vector not yet multiplied by H, or restart
    Eigen::VectorXd w = next < used ? Eigen::VectorXd(h * Q.col(static_cast<Eigen::Index>(next))) : random_vector();
    append(w);
  }
  // Rayleigh-Ritz in the Krylov basis (robust to the restarts above).
  Eigen::MatrixXd Qu = Q.leftCols(static_cast<Eigen::Index>(used));
  Eigen::MatrixXd T = Qu.transpose() * (h * Qu);
  T = 0.5 * (T + T.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  Spectrum s;
  const std::size_t kk = std::min(k, used);
  s.vectors = Qu * es.eigenvectors().leftCols(static_cast<Eigen::Index>(kk));
  for (std::size_t i = 0; i < kk; ++i) s.values.push_back(es.eigenvalues()[static_cast<Eigen::Index>(i)]);
  return s;
}

}  // namespace

Spectrum dense_spectrum(const Eigen::MatrixXd& h, std::size_t k) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  Spectrum s;
  s.dense = true;
  const std::size_t kk = std::min<std::size_t>(k, static_cast<std::size_t>(h.rows()));
  s.vectors = es.eigenvectors().leftCols(static_cast<Eigen::Index>(kk));
  for (std::size_t i = 0; i < kk; ++i) s.values.push_back(es.eigenvalues()[static_cast<Eigen::Index>(i)]);
  Eigen::SparseMatrix<double> sp = h.sparseView();
  s.norm_bound = row_sum_norm(sp);
  fill_residuals(s, sp);
  return s;
}

Spectrum low_spectrum(const Eigen::SparseMatrix<double>& h, std::size_t k, std::uint64_t seed) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  const std::size_t n = static_cast<std::size_t>(h.rows());
  if (n == 0 || k == 0) return Spectrum{};
  if (n <= kDenseLimit) return dense_spectrum(Eigen::MatrixXd(h), k);

  const double norm = row_sum_norm(h);
  // Keep the Krylov basis under ~400 MB.
  const std::size_t max_m = std::max<std::size_t>(k + 10, std::min<std::size_t>(1200, 50000000 / n));
  std::size_t m = std::min(max_m, std::max<std::size_t>(4 * k + 60, 150));
  Spectrum s;
  for (;;) {
    s = lanczos(h, k, m, seed);
    s.norm_bound = norm;
    fill_residuals(s, h);
    if (s.validated() || m >= max_m) break;
    m = std::min(max_m, 2 * m);
  }
  return s;
}

}  // namespace rotor
