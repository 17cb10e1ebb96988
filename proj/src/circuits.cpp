#include "rotor/circuits.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <stdexcept>

#include "rotor/eigensolver.hpp"

namespace rotor {

Eigen::MatrixXd bacon_shor_matrix(long s_z, double phi_x, double eps, long L) {
  if (L < 1) throw std::invalid_argument("charge cutoff must be positive");
  const Eigen::Index d = 2 * L + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  const double offset = 0.5 * static_cast<double>(s_z) * static_cast<double>(s_z) * (1.0 + eps / 2.0);
  const double hop = -std::cos(phi_x / 2.0);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double l = static_cast<double>(i - L) - 0.5 * static_cast<double>(s_z);
    h(i, i) = (2.0 - eps) * l * l + offset;
    if (i + 1 < d) h(i, i + 1) = h(i + 1, i) = hop;
  }
  return h;
}

std::vector<double> bacon_shor_band(long s_z, double phi_x, double eps, long L, std::size_t k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(bacon_shor_matrix(s_z, phi_x, eps, L), Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size() && out.size() < k; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

Eigen::Matrix4d four_phase_capacitance(const FourPhaseParams& p) {
  const double a = p.Cg + p.C + p.CJ;
  Eigen::Matrix4d c;
  c << a, -p.CJ, -p.C, 0,
       -p.CJ, a, 0, -p.C,
       -p.C, 0, a, -p.CJ,
       0, -p.C, -p.CJ, a;
  return c;
}

double agiton_diff_energy(const FourPhaseParams& p) { return p.e * p.e / (p.Cg + 2.0 * p.CJ); }

double effective_josephson_formula(const FourPhaseParams& p) {
  return p.EJ * p.EJ / (4.0 * agiton_diff_energy(p));
}

long FourPhaseSector::index(const std::array<long, 4>& l) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == l) return static_cast<long>(i);
  return -1;
}

FourPhaseSector four_phase_gadget(const FourPhaseParams& p, long S) {
  if (p.L < 1) throw std::invalid_argument("charge cutoff must be positive");
  FourPhaseSector sec;
  sec.S = S;
  std::map<std::array<long, 4>, long> where;
  for (long l1 = -p.L; l1 <= p.L; ++l1) {
    const long l2 = S - l1;
    if (l2 < -p.L || l2 > p.L) continue;
    for (long l3 = -p.L; l3 <= p.L; ++l3) {
      const long l4 = -S - l3;
      if (l4 < -p.L || l4 > p.L) continue;
      where[{l1, l2, l3, l4}] = static_cast<long>(sec.basis.size());
      sec.basis.push_back({l1, l2, l3, l4});
    }
  }
  const Eigen::Matrix4d cinv = four_phase_capacitance(p).inverse();
  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t i = 0; i < sec.basis.size(); ++i) {
    const auto& b = sec.basis[i];
    Eigen::Vector4d l(static_cast<double>(b[0]), static_cast<double>(b[1]), static_cast<double>(b[2]),
                      static_cast<double>(b[3]));
    trip.emplace_back(i, i, 2.0 * p.e * p.e * l.dot(cinv * l));
    // e^{i(theta_1 - theta_2)} moves one pair from node 2 to node 1; the
    // 3-4 junction likewise. Both directions are generated from each state.
    for (int s : {1, -1}) {
      for (int junction = 0; junction < 2; ++junction) {
        auto t = b;
        t[2 * junction] += s;
        t[2 * junction + 1] -= s;
        auto it = where.find(t);
        if (it != where.end()) trip.emplace_back(it->second, i, -p.EJ / 2.0);
      }
    }
  }
  const auto d = static_cast<Eigen::Index>(sec.basis.size());
  sec.h.resize(d, d);
  sec.h.setFromTriplets(trip.begin(), trip.end());
  return sec;
}

FourPhaseReport effective_comparison(const FourPhaseParams& p) {
  FourPhaseReport r;
  if (p.C < 10.0 * std::max(p.Cg, p.CJ)) r.warnings.push_back("C is not much larger than Cg and CJ");
  r.e_diff = agiton_diff_energy(p);
  if (p.EJ > 0.2 * r.e_diff) r.warnings.push_back("EJ is not small against the agiton energy");
  r.ej_eff_formula = effective_josephson_formula(p);

  FourPhaseSector sec = four_phase_gadget(p, 1);
  // matrix element between |m_e, m_e'> = |1, 0> and |a_+; 1, 0>
  const long from = sec.index({1, 0, -1, 0});
  const long to = sec.index({0, 1, -1, 0});
  if (from < 0 || to < 0) throw std::invalid_argument("truncation too small for the exciton doublet");
  r.matrix_element = sec.h.coeff(from, to);

  Spectrum sp = low_spectrum(sec.h, 2);
  r.splitting = sp.values[1] - sp.values[0];
  r.hop = r.splitting / 2.0;
  // The pair-tunneling amplitude is the hop itself. Read as the coefficient
  // of a cosine, which hops with half its strength, it would be twice that.
  r.ej_eff_extracted = r.splitting;
  r.relative_error = std::abs(r.hop - r.ej_eff_formula) / r.ej_eff_formula;
  double w = 0;
  for (std::size_t i = 0; i < sec.basis.size(); ++i) {
    const auto& b = sec.basis[i];
    if (b[2] == -b[0] && b[3] == -b[1]) w += sp.vectors(static_cast<Eigen::Index>(i), 0) * sp.vectors(static_cast<Eigen::Index>(i), 0);
  }
  r.zero_agiton_weight = w;
  return r;
}

}  // namespace rotor
