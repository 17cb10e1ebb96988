#include <doctest.h>

#include "rotor/constructions.hpp"
#include "rotor/homology.hpp"

using namespace rotor;

namespace {

// Square grid, periodic along j, glued along i with the flip j -> -j.
ChainComplex klein_bottle(long w, long N) {
  auto wrap = [](long a, long m) { return ((a % m) + m) % m; };
  auto vertex = [&](long i, long j) {
    if (i == w) return wrap(-j, N);
    return i * N + wrap(j, N);
  };
  CellComplexBuilder b(static_cast<std::size_t>(w * N));
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) b.add_edge(vertex(i, j), vertex(i, j + 1));
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) b.add_edge(vertex(i, j), vertex(i + 1, j));
  auto h = [&](long i, long j) { return static_cast<std::size_t>(i * N + wrap(j, N)); };
  auto v = [&](long i, long j) { return static_cast<std::size_t>(w * N + i * N + wrap(j, N)); };
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < N; ++j) {
      std::vector<std::pair<std::size_t, int>> f{{h(i, j), 1}, {v(i, j + 1), 1}, {v(i, j), -1}};
      if (i + 1 < w)
        f.push_back({h(i + 1, j), -1});
      else
        f.push_back({h(0, -j - 1), 1});
      b.add_face(f);
    }
  return make_complex(b.hx(), b.hz());
}

void check_dual_pairing(const Homology& h, const ChainComplex& c) {
  CHECK(h.lx * h.lz.transpose() == IntMatrix::identity(h.k()));
  CHECK((h.lx * c.hz.transpose()).is_zero());
  for (std::size_t i = 0; i < h.k(); ++i) {
    IntMatrix rel = IntMatrix::from_rows(std::vector<IntVector>{h.lz.row(i)}, c.n()) * c.hx.transpose();
    for (std::size_t j = 0; j < rel.cols(); ++j) {
      if (h.orders[i] == 0)
        CHECK(rel(0, j) == 0);
      else
        CHECK(rel(0, j) % h.orders[i] == 0);
    }
  }
  for (std::size_t r = 0; r < h.certificates.rows(); ++r) {
    const std::size_t g = h.certificate_rows[r];
    IntVector lhs = row_times(h.certificates.row(r), c.hx);
    IntVector rhs = h.lx.row(g);
    for (auto& x : rhs) x *= h.orders[g];
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("projective plane on four rotors") {
  RotorCode c = rp2_4();
  CHECK(c.homology.free_rank == 0);
  CHECK(c.homology.torsion == std::vector<Int>{2});
  check_dual_pairing(c.homology, c.complex);
}

TEST_CASE("CSS violation is reported with the offending checks") {
  try {
    make_complex(IntMatrix::identity(2), IntMatrix::identity(2));
    FAIL("expected CssViolation");
  } catch (const CssViolation& e) {
    CHECK(std::string(e.what()).find("X check 0") != std::string::npos);
  }
  CHECK_THROWS_AS(make_complex(IntMatrix(1, 3), IntMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("torus has two free logicals") {
  for (long w = 2; w <= 4; ++w)
    for (long N = 2; N <= 4; ++N) {
      RotorCode c = torus2(w, N);
      CHECK(c.homology.free_rank == 2);
      CHECK(c.homology.torsion.empty());
      check_dual_pairing(c.homology, c.complex);
    }
}

TEST_CASE("Klein bottle fixture") {
  for (long w : {2L, 3L})
    for (long N : {2L, 3L, 4L}) {
      ChainComplex c = klein_bottle(w, N);
      Homology h = compute_homology(c);
      CHECK(h.free_rank == 1);
      CHECK(h.torsion == std::vector<Int>{2});
      check_dual_pairing(h, c);
      CHECK(homology_mod_p(c, 2).h1 == 2);
      CHECK(homology_mod_p(c, 3).h1 == 1);
      CHECK(betti_real(c).b1 == 1);
      CHECK(orientability_check(c.hx) == Orientability::NonOrientableZ2);
    }
}

TEST_CASE("mod-p homology follows the universal coefficients") {
  std::vector<RotorCode> codes{rp2_4(),      rp2_9(),     thin_moebius(4), moebius(3, 5), cylinder(3, 5),
                               torus2(3, 4), torus3(2),   rp3_punctured(2)};
  for (const auto& code : codes) {
    for (long p : {2L, 3L, 5L}) {
      CHECK_MESSAGE(homology_mod_p(code.complex, p).h1 == predicted_mod_p_h1(code.complex, p), code.name);
    }
    CHECK(betti_real(code.complex).b1 == code.homology.free_rank);
    CHECK(cohomology_h2_torsion(code.complex) == code.homology.torsion);
  }
}

TEST_CASE("projective plane coefficient table") {
  RotorCode c = rp2_9();
  CHECK(homology_mod_p(c.complex, 2).h1 == 1);
  CHECK(homology_mod_p(c.complex, 3).h1 == 0);
  CHECK(betti_real(c.complex).b1 == 0);
}

TEST_CASE("abelian group algebra") {
  AbelianGroup z = make_group(1, {});
  AbelianGroup z2 = make_group(0, {2});
  AbelianGroup z4 = make_group(0, {4});
  CHECK(tensor(z, z2) == z2);
  CHECK(tensor(z2, z4) == z2);
  CHECK(tor(z2, z4) == z2);
  CHECK(tor(z, z4) == make_group(0, {}));
  CHECK(direct_sum(z2, make_group(0, {3})) == make_group(0, {6}));
}
