#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rotor/circuits.hpp"
#include "rotor/constructions.hpp"
#include "rotor/eigensolver.hpp"
#include "rotor/noise.hpp"
#include "rotor/simulator.hpp"

using namespace rotor;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<long> row_long(const IntMatrix& m, std::size_t i) {
  std::vector<long> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_si());
  return out;
}

}  // namespace

TEST_CASE("truncated basis bookkeeping") {
  CHECK(truncated_dimension(2, 1) == 9);
  CHECK_THROWS_AS(truncated_dimension(40, 3), CapExceeded);
  TruncatedState s = basis_state(3, 2, {1, -2, 0});
  CHECK(s.charges(s.index({1, -2, 0})) == std::vector<long>{1, -2, 0});
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK(s.index({-2, -2, -2}) == 0);
  CHECK_FALSE(s.inside({3, 0, 0}));
}

TEST_CASE("shifts, phases and leakage") {
  TruncatedState s = basis_state(2, 1, {1, 0});
  TruncatedState t = apply_x(apply_x(s, {-1, 1}), {1, -1});
  CHECK(std::abs(inner(s, t) - Complex(1.0)) < 1e-12);

  TruncatedState out = apply_x(s, {1, 0});
  CHECK(out.norm() == doctest::Approx(0.0));
  CHECK(out.leakage == doctest::Approx(1.0));

  TruncatedState z = apply_z(s, {0.3, 1.1});
  CHECK(std::abs(inner(s, z) - std::polar(1.0, 0.3)) < 1e-12);
}

TEST_CASE("commutation phase on random states") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<long> mdist(-1, 1);
  std::uniform_real_distribution<double> pdist(-kPi, kPi);
  const std::size_t n = 3;
  const long L = 3;
  for (int t = 0; t < 50; ++t) {
    TruncatedState s = zero_state(n, L);
    // Support away from the edge so the shift loses nothing.
    for (std::size_t i = 0; i < s.dim(); ++i) {
      bool interior = true;
      for (long c : s.charges(i)) interior = interior && std::labs(c) < L;
      s.amp[i] = interior ? Complex(g(rng), g(rng)) : Complex(0.0);
    }
    s.normalize();
    std::vector<long> m(n);
    std::vector<double> phi(n);
    double mphi = 0;
    for (std::size_t k = 0; k < n; ++k) {
      m[k] = mdist(rng);
      phi[k] = pdist(rng);
      mphi += static_cast<double>(m[k]) * phi[k];
    }
    TruncatedState xz = apply_x(apply_z(s, phi), m);
    TruncatedState zx = apply_z(apply_x(s, m), phi);
    const Complex phase = std::polar(1.0, -mphi);
    for (std::size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(xz.amp[i] - phase * zx.amp[i]) < 1e-12);
  }
}

TEST_CASE("codewords") {
  RotorCode c = rp2_4();
  TruncatedState w0 = codeword(c, {0}, 2, 0);
  CHECK(w0.amp[w0.index(std::vector<long>(c.n(), 0))] == Complex(1.0));

  double prev_gap = 2.0;
  for (long b = 0; b <= 2; ++b) {
    TruncatedState w = codeword(c, {0}, 4, b);
    const double gap = std::abs(expect_stabilizer_x(w, c, 0) - Complex(1.0));
    CHECK(gap <= prev_gap + 1e-12);
    prev_gap = gap;
    for (std::size_t j = 0; j < c.hz().rows(); ++j) {
      auto dist = measure_oz(w, c, j);
      CHECK(dist.size() == 1);
      CHECK(dist.begin()->first == 0);
    }
  }

  // Thin strip with two rungs: support has odd charge sum on the top row.
  RotorCode t = thin_moebius(2);
  TruncatedState w1 = codeword(t, {1}, 3, 2);
  for (std::size_t i = 0; i < w1.dim(); ++i) {
    if (std::norm(w1.amp[i]) == 0) continue;
    auto l = w1.charges(i);
    CHECK(std::labs(l[0] + l[1]) % 2 == 1);
    CHECK(l[2] == -l[0]);
    CHECK(l[3] == -l[1]);
  }
}

TEST_CASE("logical Z by pi distinguishes the two codewords") {
  RotorCode c = rp2_4();
  std::vector<double> phi;
  for (std::size_t i = 0; i < c.n(); ++i) phi.push_back(kPi * c.lz()(0, i).get_d());
  for (long m : {0L, 1L}) {
    TruncatedState w = codeword(c, {m}, 4, 2);
    const Complex ev = inner(w, apply_z(w, phi));
    CHECK(std::abs(ev - Complex(m ? -1.0 : 1.0)) < 1e-9);
  }
}

TEST_CASE("Z error rotates the X stabilizer phase") {
  RotorCode c = rp2_4();
  TruncatedState w = codeword(c, {0}, 4, 2);
  const double nu = 0.4;
  for (std::size_t k = 0; k < c.n(); ++k) {
    std::vector<double> phi(c.n(), 0.0);
    phi[k] = nu;
    TruncatedState z = apply_z(w, phi);
    const Complex before = expect_stabilizer_x(w, c, 0);
    const Complex after = expect_stabilizer_x(z, c, 0);
    const double expect = -c.hx()(0, k).get_d() * nu;
    CHECK(std::abs(after - before * std::polar(1.0, expect)) < 1e-9);
  }
}

TEST_CASE("code Hamiltonian") {
  RotorCode c = rp2_1();
  SparseHamiltonian h = build_code_hamiltonian(c, 4);
  Eigen::MatrixXd d(h.matrix);
  CHECK((d - d.transpose()).norm() < 1e-14);
  Spectrum sp = low_spectrum(h.matrix, 3);
  CHECK(sp.validated());

  // Without cosines the ground space is the kernel of every O_j^Z.
  RotorCode t = rp2_4();
  SparseHamiltonian diag = build_code_hamiltonian(t, 1, false);
  std::size_t zeros = 0;
  for (Eigen::Index i = 0; i < diag.matrix.rows(); ++i) zeros += diag.matrix.coeff(i, i) == 0.0;
  TruncatedState probe = zero_state(t.n(), 1);
  std::size_t kernel = 0;
  for (std::size_t i = 0; i < probe.dim(); ++i) {
    auto l = probe.charges(i);
    bool ok = true;
    for (std::size_t j = 0; j < t.hz().rows(); ++j) {
      long s = 0;
      for (std::size_t k = 0; k < t.n(); ++k) s += t.hz()(j, k).get_si() * l[k];
      ok = ok && s == 0;
    }
    kernel += ok;
  }
  CHECK(zeros == kernel);
}

TEST_CASE("iterative eigensolver above the dense limit") {
  const Eigen::Index n = 5000;
  std::vector<Eigen::Triplet<double>> trip;
  std::mt19937_64 rng(2);
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Eigen::Index i = 0; i < n; ++i) trip.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i)], static_cast<double>(i));
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  Spectrum sp = low_spectrum(m, 3);
  CHECK_FALSE(sp.dense);
  CHECK(sp.validated());
  CHECK(sp.values[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(sp.values[1] == doctest::Approx(1.0));
  CHECK(sp.values[2] == doctest::Approx(2.0));
}

TEST_CASE("noise sampling") {
  WeightModel model{0.3, 0.2};
  NoiseSample a = sample_noise(model, 1000, 42), b = sample_noise(model, 1000, 42);
  CHECK(a.m == b.m);
  CHECK(a.phi == b.phi);
  for (double x : a.phi) {
    CHECK(x > -kPi);
    CHECK(x <= kPi);
  }
  CHECK(von_mises_kappa(0.1) == doctest::Approx(50.0));
  CHECK(bessel_ratio(1.0) == doctest::Approx(0.4463899658));
  for (double k : {0.5, 10.0, 200.0, 600.0})
    CHECK(bessel_ratio(k) == doctest::Approx(std::cyl_bessel_i(1.0, k) / std::cyl_bessel_i(0.0, k)).epsilon(1e-12));
  CHECK(bessel_ratio(5000.0) == doctest::Approx(1.0 - 1.0 / 10000.0).epsilon(1e-7));

  std::mt19937_64 rng(1);
  double s = 0;
  const int N = 100000;
  for (int i = 0; i < N; ++i) s += std::cos(sample_von_mises(2.0, rng));
  CHECK(s / N == doctest::Approx(bessel_ratio(2.0)).epsilon(0.02));
}

TEST_CASE("Bacon-Shor bands") {
  for (long sz : {-1L, 0L, 1L, 2L})
    for (double phix : {0.0, 1.0, kPi}) {
      auto lo = bacon_shor_band(sz, phix, 0.1, 16);
      auto hi = bacon_shor_band(sz + 2, phix, 0.1, 16);
      for (std::size_t k = 0; k < lo.size(); ++k)
        CHECK(hi[k] - lo[k] == doctest::Approx((2.0 * sz + 2) * 1.05).epsilon(1e-10));
    }
  auto touch = bacon_shor_band(1, kPi, 0.0, 16);
  CHECK(std::abs(touch[1] - touch[0]) < 1e-12);
  auto a = bacon_shor_band(0, 0.0, 0.0, 16), b = bacon_shor_band(0, 2 * kPi, 0.0, 16);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]));
}

TEST_CASE("four-phase gadget") {
  FourPhaseParams p;
  CHECK(agiton_diff_energy(p) == doctest::Approx(1.0));
  CHECK(effective_josephson_formula(p) == doctest::Approx(0.05 * 0.05 / 4));
  Eigen::Matrix4d cm = four_phase_capacitance(p);
  CHECK((cm - cm.transpose()).norm() == 0.0);

  p.EJ = 0.0;
  FourPhaseReport r = effective_comparison(p);
  CHECK(r.splitting == doctest::Approx(0.0).scale(1.0));
  CHECK(r.zero_agiton_weight == doctest::Approx(1.0));
  CHECK(r.matrix_element == 0.0);

  p.EJ = 0.05;
  FourPhaseSector sec = four_phase_gadget(p);
  CHECK(sec.h.coeff(sec.index({1, 0, -1, 0}), sec.index({0, 1, -1, 0})) == -0.025);

  p.C = 5.0;
  CHECK_FALSE(effective_comparison(p).warnings.empty());
}
