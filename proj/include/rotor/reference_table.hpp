#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rotor/rotor_code.hpp"

namespace rotor {

// Published parameters of one code instance. A row passes when the built
// code's free rank and torsion multiset match exactly; a differing rotor
// count is reported in the note.
struct ReferenceEntry {
  std::string label;
  std::function<RotorCode()> build;
  long declared_n = -1;  // -1 when only a figure fixes the count
  std::size_t declared_free = 0;
  std::vector<long> declared_torsion;  // invariant factors
  std::string declared_distances;      // e.g. "(2,2)", display only
};

struct ReferenceRow {
  std::string label;
  std::string declared;
  std::string computed;
  bool pass = false;
  std::string note;
  double seconds = 0.0;
};

std::vector<ReferenceEntry> reference_entries();
ReferenceRow evaluate(const ReferenceEntry& e);
std::vector<ReferenceRow> reference_table();

}  // namespace rotor
