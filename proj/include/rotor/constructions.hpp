#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotor/rotor_code.hpp"

namespace rotor {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Explicit small projective-plane codes.
RotorCode rp2_1();
RotorCode rp2_4();
RotorCode rp2_9();

// Two-row strip with a twist: n = 2N, a qubit with d_X = 2.
RotorCode thin_moebius(long N);
// Strip of w face rows and length N with rough top and bottom edges.
RotorCode moebius(long w, long N);
RotorCode cylinder(long w, long N);
RotorCode torus2(long w, long N);
RotorCode torus3(long N);
// N x N x N cube, rough at the bottom and top, side faces glued by the
// point reflection through the cube centre.
RotorCode rp3_punctured(long N);

// Builds any of the families above by name; params use keys "w" and "N".
RotorCode build_family(const std::string& family, const std::map<std::string, long>& params);
std::vector<std::string> family_names();

enum class Orientability { Orientable, NonOrientableZ2, NotAManifoldBoundary };
std::string to_string(Orientability o);

// Treats H_X as the face-edge incidence of a closed surface. Every column
// needs exactly two +-1 entries and the faces must be connected; the
// surface is orientable iff some +-1 row signs s give s H_X = 0. The answer
// is cross-checked against the torsion of Z^n / rowspace(H_X), which is
// empty for an orientable surface and [2] otherwise.
Orientability orientability_check(const IntMatrix& hx);

// Helper that assembles H_X and H_Z from a cell structure. Edges carry an
// optional tail and head vertex (absent on rough boundaries).
class CellComplexBuilder {
 public:
  static constexpr long kNone = -1;
  explicit CellComplexBuilder(std::size_t vertices) : vertices_(vertices) {}
  std::size_t add_edge(long tail, long head);
  void add_face(const std::vector<std::pair<std::size_t, int>>& boundary);
  std::size_t num_edges() const { return tails_.size(); }
  IntMatrix hx() const;
  IntMatrix hz() const;

 private:
  std::size_t vertices_;
  std::vector<long> tails_, heads_;
  std::vector<std::vector<std::pair<std::size_t, int>>> faces_;
};

}  // namespace rotor
