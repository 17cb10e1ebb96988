#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotor/int_matrix.hpp"

namespace rotor {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inv;
  IntMatrix D;
  std::vector<Int> diag;  // the nonzero diagonal entries, all positive
  std::size_t rank = 0;
};

// Pivot choice: smallest absolute nonzero entry of the active block,
// ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form: W * A = H, H has `rank` nonzero rows in
// echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix W;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// Reduce v modulo the row lattice of an HNF. If `coeffs` is given, it
// receives c with v_out = v - c * H (c indexes the nonzero rows of H).
IntVector reduce_mod_hnf(const IntVector& v, const HermiteForm& h, IntVector* coeffs = nullptr);

// Reusable solver for s * A = v over the integers.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& a);
  std::optional<IntVector> solve(const IntVector& v) const;
  bool contains(const IntVector& v) const { return solve(v).has_value(); }
  const SmithForm& smith() const { return snf_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  SmithForm snf_;
};

std::optional<IntVector> solve_left(const IntMatrix& a, const IntVector& v);

// Basis of {x : x * A = 0}, rows in Hermite normal form.
IntMatrix left_kernel_basis(const IntMatrix& a);

// Structure of Z^n / rowspace(A).
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;      // invariant factors > 1, ascending
  IntMatrix generators;          // free generators first, then torsion
  std::vector<Int> orders;       // 0 marks a free generator
  IntMatrix certificates;        // row i: s with s * A = orders[i] * generators[i] (torsion only)
  std::vector<std::size_t> certificate_rows;  // generator index for each certificate row
};

CokernelStructure cokernel(const IntMatrix& a);

// Order of the class of v in Z^n / rowspace(A); std::nullopt means infinite.
std::optional<Int> order_in_quotient(const IntMatrix& a, const IntVector& v);

// Exact inverse of a unimodular square matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Torsion bookkeeping helpers.
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);
std::vector<Int> elementary_divisors(const std::vector<Int>& cyclic_orders);
// Groups elementary divisors as "2^12·4^4"; empty group prints "0".
std::string group_torsion(const std::vector<Int>& cyclic_orders);
std::string describe_group(std::size_t free_rank, const std::vector<Int>& torsion);

}  // namespace rotor
