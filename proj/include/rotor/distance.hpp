#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotor/rotor_code.hpp"
#include "rotor/syndrome_search.hpp"

namespace rotor {

// Per-rotor potentials: V_Z(phi) = sin^2(phi/2), V_X(m) = |m|.
struct WeightModel {
  double sigma = 0.1;
  double p_jump = 0.1;
  double beta_z() const { return 1.0 / (sigma * sigma); }
  double beta_x() const;
  void validate() const;
};

long weight_x(const IntVector& v);
long weight_x(const SmallVec& v);
double weight_z(const std::vector<double>& phi);

struct XDistance {
  std::optional<long> d;  // exact value if found within max_weight
  SmallVec witness;
  bool exhausted = true;  // false if a node limit cut the search
  long searched_up_to = 0;
};

struct SearchOptions {
  unsigned jobs = 1;
  std::uint64_t max_nodes = 0;
};

XDistance x_distance_exact(const RotorCode& code, long max_weight, const SearchOptions& opt = {});

// Minimal Hamming weight of a logical of the qudit code C^l that is not
// trivial mod l.
std::optional<long> qudit_x_distance(const RotorCode& code, long l, long max_weight, const SearchOptions& opt = {});

struct QuditTransferBound {
  long bound = 0;                 // max over admissible l, 0 if none
  std::vector<long> admissible;   // l values where the witness survives mod l
  std::vector<std::pair<long, std::optional<long>>> per_l;
};

// Lower bound on d_X from qudit distances at the l values where the
// minimal-weight witness stays nontrivial.
QuditTransferBound qudit_transfer_bound(const RotorCode& code, const SmallVec& witness, const std::vector<long>& dims,
                             long max_weight, const SearchOptions& opt = {});

class NoUnitRepresentative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DisjointRepSet {
  std::vector<SmallVec> reps;
  std::vector<Int> class_coords;
  std::size_t n_x() const { return reps.size(); }
  long d_x_max() const;
  std::vector<long> weights() const;
};

struct RepSearchOptions {
  long max_rep_weight = 0;      // 0: lightest representative weight + 2
  std::size_t max_candidates = 20000;
  std::uint64_t max_nodes = 2000000;
  unsigned jobs = 1;
  double alpha = 0.0;           // packing objective; 0 means the rotor limit
};

// Pairwise disjoint {-1,0,1} representatives of the class `class_coords`.
DisjointRepSet find_disjoint_reps(const RotorCode& code, const std::vector<Int>& class_coords,
                                  const RepSearchOptions& opt = {});

// Checks the hypotheses of the bound: entries in {-1,0,1}, disjoint
// supports, same nontrivial class.
bool valid_disjoint_reps(const RotorCode& code, const DisjointRepSet& s, std::string* why = nullptr);

// sum_i D_i sin^2(alpha / 2 D_i) / sin^2(alpha / 2); alpha = 0 gives the
// limit sum_i 1 / D_i.
double z_lower_bound(const std::vector<long>& rep_weights, double alpha);
double z_lower_bound(const DisjointRepSet& s, double alpha);

// n sin^2(alpha / 2n).
double spread_min_closed_form(long n, double alpha);

struct SpreadOptions {
  int max_iters = 4000;
  double step = 0.5;
  double tol = 1e-12;
  int restarts = 8;
  std::uint64_t seed = 12345;
  unsigned jobs = 1;
};

struct SpreadResult {
  double value = 0.0;          // W_Z(phi) / sin^2(alpha / 2)
  std::vector<double> nu;      // stabilizer phases
  std::vector<double> phi;     // resulting phase vector in (-pi, pi]
  bool converged = false;
  int iterations = 0;
};

// Weight of alpha * lz_row + nu H_Z divided by sin^2(alpha / 2).
double spread_objective(const RotorCode& code, std::size_t logical, double alpha, const std::vector<double>& nu,
                        std::vector<double>* grad = nullptr);

SpreadResult z_upper_spread(const RotorCode& code, std::size_t logical, double alpha, const SpreadOptions& opt = {});
// Same, starting from an arbitrary phase representative instead of alpha * lz.
SpreadResult z_upper_spread_from(const IntMatrix& hz, const std::vector<double>& phi0, double alpha,
                                 const SpreadOptions& opt = {});

// Lightest integer vector z in the Z-logical class of generator `logical`
// (z . lx_i = delta_ij, mod d for a torsion generator of order d), found by
// a dual shell search over the X checks.
std::optional<SmallVec> compact_z_representative(const RotorCode& code, std::size_t logical, long max_weight,
                                                 const SearchOptions& opt = {});

// Lightest integer z with z H_X^T = 0 and z . x = +-1: a Z logical that
// detects the X class of x, with no condition on other classes. alpha * z
// commutes with every X check for any alpha.
std::optional<SmallVec> lightest_z_logical(const RotorCode& code, const IntVector& x, long max_weight,
                                           const SearchOptions& opt = {});
// alpha -> 0 value: min over real mu of |lz + mu H_Z|^2.
double z_rotor_limit(const RotorCode& code, std::size_t logical);

// Numerical minimum of W_Z(phi) over phi with m . phi = alpha + 2 pi k for
// an all +-1 vector m of weight n, sweeping k and the sign pattern.
double spread_min_numeric(long n, double alpha, int max_k = 2);

}  // namespace rotor
