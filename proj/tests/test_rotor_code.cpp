#include <doctest.h>

#include <random>

#include "rotor/constructions.hpp"
#include "rotor/rotor_code.hpp"

using namespace rotor;

namespace {

IntVector scaled_row(const IntMatrix& m, std::size_t i, long s) {
  IntVector v = m.row(i);
  for (auto& x : v) x *= s;
  return v;
}

std::vector<Rational> half_turns(const IntVector& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(frac_part(Rational(x, 2)));
  return out;
}

// Lower triangular binomial matrix, unimodular with a dense inverse.
IntMatrix pascal(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = 1;
    for (std::size_t j = 1; j <= i; ++j) m(i, j) = m(i - 1, j - 1) + (j < i ? m(i - 1, j) : Int(0));
  }
  return m;
}

}  // namespace

TEST_CASE("X classification on the four-rotor projective plane") {
  RotorCode c = rp2_4();
  const IntVector lx = c.lx().row(0);
  XClassification x = classify_x(c, lx);
  CHECK(x.kind == OpKind::Logical);
  CHECK(x.coordinates == std::vector<Int>{1});
  CHECK(classify_x(c, scaled_row(c.lx(), 0, 2)).kind == OpKind::Stabilizer);
  CHECK(classify_x(c, scaled_row(c.lx(), 0, 3)).kind == OpKind::Logical);
  CHECK(classify_x(c, c.hx().row(0)).kind == OpKind::Stabilizer);

  IntVector e0(c.n(), Int(0));
  e0[0] = 1;
  if (!is_zero(x_syndrome(c, e0))) CHECK(classify_x(c, e0).kind == OpKind::NonCommuting);
  CHECK(class_coordinates(c, lx) == std::vector<Int>{1});
}

TEST_CASE("Z classification with exact phases") {
  RotorCode c = rp2_4();
  ZClassification z = classify_z(c, PhaseVector::exact(half_turns(c.lz().row(0))));
  CHECK(z.kind == OpKind::Logical);
  CHECK(z.logical_phases == std::vector<Rational>{Rational(1, 2)});

  std::vector<Rational> zero(c.n(), Rational(0));
  CHECK(classify_z(c, PhaseVector::exact(zero)).kind == OpKind::Stabilizer);

  std::vector<Rational> bad(c.n(), Rational(0));
  bad[0] = Rational(1, 3);
  CHECK(classify_z(c, PhaseVector::exact(bad)).kind == OpKind::NonCommuting);
}

TEST_CASE("torus logicals are free and independent") {
  RotorCode c = torus2(3, 3);
  for (std::size_t j = 0; j < c.num_logicals(); ++j) {
    XClassification x = classify_x(c, scaled_row(c.lx(), j, 5));
    CHECK(x.kind == OpKind::Logical);
    std::vector<Int> expect(c.num_logicals(), Int(0));
    expect[j] = 5;
    CHECK(x.coordinates == expect);
  }
}

TEST_CASE("qudit reduction keeps the Z2 logical only for even dimensions") {
  RotorCode c = rp2_9();
  CHECK(qudit_reduce(c, 2).surviving_count() == 1);
  CHECK(qudit_reduce(c, 4).surviving_count() == 1);
  CHECK(qudit_reduce(c, 3).surviving_count() == 0);
  CHECK(qudit_reduce(c, 5).surviving_count() == 0);
  CHECK(nontrivial_mod(c, c.lx().row(0), 2));
  CHECK_FALSE(nontrivial_mod(c, c.lx().row(0), 3));

  RotorCode t = torus2(2, 3);
  for (long d : {2L, 3L, 5L}) CHECK(qudit_reduce(t, d).surviving_count() == 2);
}

TEST_CASE("change of variables preserves the logical group") {
  for (const RotorCode& c : {rp2_4(), torus2(2, 2), thin_moebius(3)}) {
    RotorCode d = change_of_variables(c, pascal(c.n()));
    CHECK(d.homology.free_rank == c.homology.free_rank);
    CHECK(d.homology.torsion == c.homology.torsion);
    CHECK((d.hx() * d.hz().transpose()).is_zero());
  }
}

TEST_CASE("syndromes are linear") {
  RotorCode c = moebius(3, 5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int t = 0; t < 50; ++t) {
    IntVector a(c.n()), b(c.n()), s(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
      s[i] = a[i] + b[i];
    }
    IntVector sa = x_syndrome(c, a), sb = x_syndrome(c, b), ss = x_syndrome(c, s);
    for (std::size_t i = 0; i < ss.size(); ++i) CHECK(ss[i] == sa[i] + sb[i]);
  }
}
