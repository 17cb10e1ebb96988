#include "rotor/reference_table.hpp"

#include <chrono>

#include "rotor/constructions.hpp"
#include "rotor/products.hpp"

namespace rotor {

std::vector<ReferenceEntry> reference_entries() {
  std::vector<ReferenceEntry> out;
  const std::vector<long> z2{2};
  out.push_back({"RP2(1)", rp2_1, 1, 0, z2, "(1,1)"});
  out.push_back({"RP2(4)", rp2_4, 4, 0, z2, "(2,2)"});
  out.push_back({"RP2(9)", rp2_9, 9, 0, z2, "(3,dZ)"});
  for (long N = 2; N <= 8; ++N)
    out.push_back({"thin-Moebius(" + std::to_string(N) + ")", [N] { return thin_moebius(N); }, 2 * N, 0, z2,
                   "(2," + std::to_string(N) + ")"});
  out.push_back({"Moebius(3,5)", [] { return moebius(3, 5); }, 2 * 5 * 3 - 5, 0, z2, "(3,dZ)"});
  out.push_back({"cylinder(3,5)", [] { return cylinder(3, 5); }, -1, 1, {}, "(3,dZ)"});
  for (long w = 2; w <= 5; ++w)
    for (long N = 2; N <= 5; ++N)
      out.push_back({"torus2(" + std::to_string(w) + "," + std::to_string(N) + ")", [w, N] { return torus2(w, N); },
                     2 * w * N, 2, {}, "(" + std::to_string(std::min(w, N)) + ",dZ)"});
  out.push_back({"torus3(2)", [] { return torus3(2); }, 3 * 8, 3, {}, "(2,2)"});
  out.push_back({"RP3*(2)", [] { return rp3_punctured(2); }, 3 * 8 - 4, 0, z2, "(2,2)"});
  out.push_back({"FreeFree-Hamming", hamming_free_free, 58, 16, {}, "(3,dZ)"});
  std::vector<long> tf(12, 2);
  tf.insert(tf.end(), 4, 4);
  out.push_back({"TorsionFree-Hamming", hamming_torsion_free, 70, 0, tf, "(3,dZ)"});
  std::vector<long> tt(15, 2);
  tt.push_back(4);
  out.push_back({"TorsionTorsion-Hamming", hamming_torsion_torsion, 98, 0, tt, "(3,dZ)"});
  return out;
}

ReferenceRow evaluate(const ReferenceEntry& e) {
  const auto t0 = std::chrono::steady_clock::now();
  ReferenceRow row;
  row.label = e.label;
  std::vector<Int> dt;
  for (long d : e.declared_torsion) dt.emplace_back(d);
  const std::string n_text = e.declared_n >= 0 ? std::to_string(e.declared_n) : "n";
  row.declared = "[[" + n_text + "," + describe_group(e.declared_free, dt) + "," + e.declared_distances + "]]";

  RotorCode code = e.build();
  const Homology& h = code.homology;
  row.computed = "[[" + std::to_string(code.n()) + "," + describe_group(h.free_rank, h.torsion) + ",(?,?)]]";
  row.pass = h.free_rank == e.declared_free && invariant_factors(h.torsion) == invariant_factors(dt);
  if (e.declared_n >= 0 && static_cast<long>(code.n()) != e.declared_n)
    row.note = "rotor count differs: declared " + std::to_string(e.declared_n) + ", built " + std::to_string(code.n());
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<ReferenceRow> reference_table() {
  std::vector<ReferenceRow> rows;
  for (const auto& e : reference_entries()) rows.push_back(evaluate(e));
  return rows;
}

}  // namespace rotor
