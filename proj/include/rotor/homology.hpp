#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotor/int_matrix.hpp"
#include "rotor/smith.hpp"

namespace rotor {

class CssViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Z^{r_x} --H_X--> Z^n --H_Z^T--> Z^{r_z}, acting on row vectors.
struct ChainComplex {
  IntMatrix hx;  // r_x x n
  IntMatrix hz;  // r_z x n
  std::size_t n() const { return hx.cols(); }
};

// Validates shapes and H_X * H_Z^T = 0.
ChainComplex make_complex(IntMatrix hx, IntMatrix hz);

// H_1 = ker(H_Z^T) / im(H_X) with explicit generators.
struct Homology {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;   // invariant factors > 1, ascending
  IntMatrix lx;               // generator lifts, free rows first
  IntMatrix lz;               // dual rows, lx * lz^T = identity (torsion column j mod orders[j])
  std::vector<Int> orders;    // 0 marks a free generator
  IntMatrix certificates;     // torsion row i: s with s * H_X = d_i * lx_i
  std::vector<std::size_t> certificate_rows;
  std::size_t k() const { return orders.size(); }
};

Homology compute_homology(const ChainComplex& c);

struct ModPHomology {
  long p = 0;
  std::size_t h0 = 0, h1 = 0, h2 = 0;
};

ModPHomology homology_mod_p(const ChainComplex& c, long p);

struct Betti {
  std::size_t b0 = 0, b1 = 0, b2 = 0;
};

Betti betti_real(const ChainComplex& c);

// Universal-coefficient prediction of dim H_1(C; F_p) from the integral data:
// free rank of H_1, torsion of H_1 and torsion of H_0.
std::size_t predicted_mod_p_h1(const ChainComplex& c, long p);

// Torsion of H^2 computed from the cochain side; equals the torsion of H_1.
std::vector<Int> cohomology_h2_torsion(const ChainComplex& c);

// Orientation data for surface-like complexes (each column of H_X has
// exactly two +-1 entries).
struct OrientationReport {
  bool surface_like = false;
  bool connected = false;
  bool orientable = false;
};

OrientationReport classify_orientation(const ChainComplex& c);

// Abelian group Z^free + torsion used for Kuenneth style bookkeeping.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factor form
  bool operator==(const AbelianGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

AbelianGroup make_group(std::size_t free_rank, const std::vector<Int>& cyclic);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace rotor
