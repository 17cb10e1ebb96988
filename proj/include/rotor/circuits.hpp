#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <array>
#include <string>
#include <vector>

namespace rotor {

// Gauge-rotor Hamiltonian of the four-rotor Bacon-Shor code in one sector:
// (2 - eps)(l - s_z/2)^2 + s_z^2/2 (1 + eps/2) - 2 cos(phi_x/2) cos(theta),
// diagonalised in the charge basis l in [-L, L].
Eigen::MatrixXd bacon_shor_matrix(long s_z, double phi_x, double eps, long L);
std::vector<double> bacon_shor_band(long s_z, double phi_x, double eps, long L, std::size_t k = 3);

struct FourPhaseParams {
  double C = 100.0;
  double Cg = 1.0;
  double CJ = 0.0;
  double EJ = 0.05;
  double e = 1.0;  // charge unit; charging energies scale with e^2
  long L = 6;      // node charges l_k in [-L, L]
};

Eigen::Matrix4d four_phase_capacitance(const FourPhaseParams& p);
// e^2 / (C_g + 2 C_J)
double agiton_diff_energy(const FourPhaseParams& p);
// E_J^2 / (4 E_diff)
double effective_josephson_formula(const FourPhaseParams& p);

// Node-basis Hamiltonian 2 e^2 l^T C^{-1} l - E_J cos(theta_1 - theta_2)
// - E_J cos(theta_3 - theta_4). The junctions conserve l_1 + l_2 and
// l_3 + l_4, so the basis is restricted to l_1 + l_2 = S, l_3 + l_4 = -S,
// which contains the zero-agiton states |m, S - m> (l_3 = -l_1, l_4 = -l_2).
struct FourPhaseSector {
  long S = 1;
  std::vector<std::array<long, 4>> basis;
  Eigen::SparseMatrix<double> h;
  long index(const std::array<long, 4>& l) const;
};
FourPhaseSector four_phase_gadget(const FourPhaseParams& p, long S = 1);

struct FourPhaseReport {
  double e_diff = 0.0;
  double ej_eff_formula = 0.0;
  double splitting = 0.0;       // lowest doublet splitting in the S = 1 sector
  double hop = 0.0;             // |<0,1|H_eff|1,0>| = splitting / 2
  double ej_eff_extracted = 0.0;  // cosine coefficient, twice the hop
  double relative_error = 0.0;  // hop vs formula
  double matrix_element = 0.0;  // <m_e, m_e'|V|a_+; m_e, m_e'>
  double zero_agiton_weight = 0.0;  // ground state weight on zero-agiton states
  std::vector<std::string> warnings;
};

FourPhaseReport effective_comparison(const FourPhaseParams& p);

}  // namespace rotor
