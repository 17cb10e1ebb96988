#include <doctest.h>

#include <random>

#include "rotor/constructions.hpp"
#include "rotor/products.hpp"

using namespace rotor;

TEST_CASE("rotor counts of the explicit families") {
  CHECK(rp2_1().n() == 1);
  CHECK(rp2_4().n() == 4);
  CHECK(rp2_9().n() == 9);
  for (long N = 2; N <= 8; ++N) CHECK(thin_moebius(N).n() == static_cast<std::size_t>(2 * N));
  CHECK(moebius(3, 5).n() == 25);
  CHECK(torus2(3, 4).n() == 24);
  CHECK(torus3(2).n() == 24);
  CHECK(rp3_punctured(2).n() == 18);
  CHECK(hamming_free_free().n() == 58);
  CHECK(hamming_torsion_free().n() == 70);
  CHECK(hamming_torsion_torsion().n() == 98);
}

TEST_CASE("logical groups of the explicit families") {
  for (const RotorCode& c : {rp2_1(), rp2_4(), rp2_9(), thin_moebius(5), moebius(3, 5), moebius(5, 5), rp3_punctured(2)}) {
    CHECK_MESSAGE(c.homology.free_rank == 0, c.name);
    CHECK_MESSAGE(c.homology.torsion == std::vector<Int>{2}, c.name);
  }
  CHECK(cylinder(3, 5).homology.free_rank == 1);
  CHECK(cylinder(3, 5).homology.torsion.empty());
  CHECK(torus3(2).homology.free_rank == 3);
}

TEST_CASE("build_family reaches every family") {
  for (const auto& f : family_names()) {
    RotorCode c = build_family(f, {{"w", 3}, {"N", 3}});
    CHECK(c.n() > 0);
  }
  CHECK_THROWS_AS(build_family("no-such-family", {}), ConstructionError);
  CHECK_THROWS_AS(moebius(2, 5), ConstructionError);
}

TEST_CASE("orientability of closed surfaces") {
  CHECK(orientability_check(rp2_4().hx()) == Orientability::NonOrientableZ2);
  CHECK(orientability_check(rp2_9().hx()) == Orientability::NonOrientableZ2);
  CHECK(orientability_check(torus2(3, 3).hx()) == Orientability::Orientable);
  // Rough edges leave every column with two entries; the strip itself is
  // non-orientable.
  CHECK(orientability_check(moebius(3, 5).hx()) == Orientability::NonOrientableZ2);
  CHECK(orientability_check(cylinder(3, 5).hx()) == Orientability::Orientable);
  CHECK(orientability_check(rp2_1().hx()) == Orientability::NotAManifoldBoundary);
  CHECK(to_string(Orientability::Orientable) == "orientable");
}

TEST_CASE("sign flips of rotors do not change the logical group") {
  std::mt19937_64 rng(9);
  for (const RotorCode& c : {rp2_9(), moebius(3, 5), torus2(2, 3)}) {
    IntMatrix flip = IntMatrix::identity(c.n());
    for (std::size_t i = 0; i < c.n(); ++i)
      if (rng() & 1) flip(i, i) = -1;
    RotorCode d = change_of_variables(c, flip);
    CHECK(d.homology.free_rank == c.homology.free_rank);
    CHECK(d.homology.torsion == c.homology.torsion);
  }
}

TEST_CASE("Hamming products") {
  RotorCode ff = hamming_free_free();
  CHECK(ff.homology.free_rank == 16);
  CHECK(ff.homology.torsion.empty());

  RotorCode tf = hamming_torsion_free();
  CHECK(tf.homology.free_rank == 0);
  CHECK(group_torsion(tf.homology.torsion) == "2^12·4^4");

  RotorCode tt = hamming_torsion_torsion();
  CHECK(tt.homology.free_rank == 0);
  CHECK(group_torsion(tt.homology.torsion) == "2^15·4");

  const std::vector<ProductInput> inputs{{hamming_h(), hamming_h().transpose(), ProductFlavor::FreeFree},
                                         {hamming_square(), hamming_h().transpose(), ProductFlavor::TorsionFree},
                                         {hamming_square(), hamming_square(), ProductFlavor::TorsionTorsion}};
  for (const auto& in : inputs) {
    RotorCode c = tensor_product(in);
    ProductLogicals pl = product_logicals(in);
    CHECK(generates_homology(c, pl.lx));
    AbelianGroup predicted = kunneth_prediction(in.dc, in.dd);
    CHECK(predicted == make_group(c.homology.free_rank, c.homology.torsion));
  }
  CHECK_THROWS_AS(product_logicals({hamming_h(), hamming_h(), ProductFlavor::TorsionTorsion}), FactorStructureViolation);
}

TEST_CASE("Kuenneth prediction on random factors") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int t = 0; t < 30; ++t) {
    auto rnd = [&](std::size_t r, std::size_t c) {
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
      return m;
    };
    IntMatrix dc = rnd(1 + rng() % 3, 1 + rng() % 3), dd = rnd(1 + rng() % 3, 1 + rng() % 3);
    RotorCode c = tensor_product({dc, dd});
    CHECK(kunneth_prediction(dc, dd) == make_group(c.homology.free_rank, c.homology.torsion));
  }
}

TEST_CASE("Bezout coefficients") {
  for (long d = 1; d <= 12; ++d)
    for (long p = 1; p <= 12; ++p) {
      Bezout b = bezout_min(d, p);
      CHECK(b.g == gcd(Int(d), Int(p)));
      CHECK(b.u * d - b.v * p == b.g);
      CHECK(b.u >= 0);
      CHECK(b.u < p / b.g);
    }
  Bezout b = bezout_min(2, 3);
  CHECK(b.u == 2);
  CHECK(b.v == 1);
}
