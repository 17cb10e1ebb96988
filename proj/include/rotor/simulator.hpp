#pragma once

#include <Eigen/Sparse>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rotor/rotor_code.hpp"

namespace rotor {

using Complex = std::complex<double>;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest state or Hamiltonian dimension we agree to allocate. Defaults to
// 200000 and can be overridden with the ROTORCODES_MAX_DIM environment
// variable.
std::size_t max_dimension();
// Below this size eigenproblems are solved densely.
constexpr std::size_t kDenseLimit = 4000;

// (2L+1)^n, or throws CapExceeded when it passes max_dimension().
std::size_t truncated_dimension(std::size_t n, long L);

// Amplitudes over charges l_j in [-L, L], ordered lexicographically with
// l_1 the most significant digit.
struct TruncatedState {
  std::size_t n = 0;
  long L = 0;
  std::vector<Complex> amp;
  double leakage = 0.0;  // probability mass shifted out of the box so far

  std::size_t dim() const { return amp.size(); }
  std::size_t index(const std::vector<long>& charges) const;
  std::vector<long> charges(std::size_t index) const;
  bool inside(const std::vector<long>& charges) const;
  double norm() const;
  void normalize();
};

TruncatedState zero_state(std::size_t n, long L);
TruncatedState basis_state(std::size_t n, long L, const std::vector<long>& charges);

// Equal superposition over the distinct coset points g H_X + mbar L_X with
// g in [-box_radius, box_radius]^{r_x}, keeping those inside the box.
TruncatedState codeword(const RotorCode& code, const std::vector<long>& mbar, long L, long box_radius);

// X(m)|l> = |l + m>; amplitude pushed outside the box is dropped and added
// to leakage.
TruncatedState apply_x(const TruncatedState& s, const std::vector<long>& m);
// Z(phi)|l> = exp(i phi . l)|l>.
TruncatedState apply_z(const TruncatedState& s, const std::vector<double>& phi);

Complex inner(const TruncatedState& a, const TruncatedState& b);
// <psi| X(h_j^X) |psi>, whose phase is the X syndrome angle.
Complex expect_stabilizer_x(const TruncatedState& s, const RotorCode& code, std::size_t j);
// Outcome distribution of O_j^Z = h_j^Z . l.
std::map<long, double> measure_oz(const TruncatedState& s, const RotorCode& code, std::size_t j);

struct SparseHamiltonian {
  Eigen::SparseMatrix<double> matrix;  // real symmetric
  std::size_t n = 0;
  long L = 0;
  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
};

// -sum_j cos(h_j^X . theta) + sum_j (h_j^Z . l)^2 on the truncated charge
// lattice. The cosine terms are (shift + shift^T) / 2.
SparseHamiltonian build_code_hamiltonian(const RotorCode& code, long L, bool include_cos = true);

}  // namespace rotor
