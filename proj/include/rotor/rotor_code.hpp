#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotor/homology.hpp"

namespace rotor {

using Rational = mpq_class;

// A CSS rotor code: X checks are rows of H_X acting on angles, Z checks are
// rows of H_Z acting on charges.
struct RotorCode {
  std::string name;
  ChainComplex complex;
  Homology homology;
  std::map<std::string, std::string> meta;

  const IntMatrix& hx() const { return complex.hx; }
  const IntMatrix& hz() const { return complex.hz; }
  std::size_t n() const { return complex.n(); }
  const IntMatrix& lx() const { return homology.lx; }
  const IntMatrix& lz() const { return homology.lz; }
  std::size_t num_logicals() const { return homology.k(); }
};

RotorCode make_code(std::string name, IntMatrix hx, IntMatrix hz,
                    std::map<std::string, std::string> meta = {});

// Phases measured in turns (multiples of 2*pi). Exact vectors carry
// rationals reduced into [0, 1); inexact ones only the float mirror.
class PhaseVector {
 public:
  static PhaseVector exact(std::vector<Rational> turns);
  static PhaseVector radians(std::vector<double> values);

  bool is_exact() const { return exact_; }
  std::size_t size() const { return radians_.size(); }
  const std::vector<Rational>& turns() const { return turns_; }
  const std::vector<double>& radians() const { return radians_; }

 private:
  bool exact_ = false;
  std::vector<Rational> turns_;
  std::vector<double> radians_;
};

Rational frac_part(const Rational& q);

enum class OpKind { NonCommuting, Stabilizer, Logical };
std::string to_string(OpKind k);

struct XClassification {
  OpKind kind = OpKind::NonCommuting;
  IntVector syndrome;            // H_Z v^T
  std::vector<Int> coordinates;  // free entries exact, torsion entries in [0, d)
};

struct ZClassification {
  OpKind kind = OpKind::NonCommuting;
  std::vector<Rational> syndrome;        // H_X phi^T in turns, reduced mod 1
  std::vector<Rational> logical_phases;  // in turns, reduced mod 1
  std::vector<Rational> stabilizer_part; // nu with phi = theta L_Z + nu H_Z mod 1
};

IntVector x_syndrome(const RotorCode& code, const IntVector& v);
std::vector<Rational> z_syndrome(const RotorCode& code, const PhaseVector& phi);

XClassification classify_x(const RotorCode& code, const IntVector& v);
ZClassification classify_z(const RotorCode& code, const PhaseVector& phi);

// Fast class coordinates via the dual rows: c_j = v . lz_j (torsion mod d_j).
std::vector<Int> class_coordinates(const RotorCode& code, const IntVector& v);

struct QuditReduction {
  long d = 0;
  IntMatrix hx_mod, hz_mod;
  std::vector<bool> survives;  // per rotor logical generator
  std::size_t surviving_count() const;
};

// A rotor logical survives in the qudit code iff lx_i is not in
// rowspace(H_X) + d Z^n.
QuditReduction qudit_reduce(const RotorCode& code, long d);
bool nontrivial_mod(const RotorCode& code, const IntVector& v, long d);

// H_X' = H_X M, H_Z' = H_Z (M^T)^{-1} for unimodular M.
RotorCode change_of_variables(const RotorCode& code, const IntMatrix& m);

}  // namespace rotor
