#include <doctest.h>

#include <random>

#include "rotor/smith.hpp"

using namespace rotor;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool unimodular(const IntMatrix& m) {
  const Int det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("smith form of tiny matrices") {
  SmithForm s = smith_normal_form(IntMatrix{{2}});
  CHECK(s.diag == std::vector<Int>{2});
  CHECK(s.rank == 1);

  s = smith_normal_form(IntMatrix::identity(4));
  CHECK(s.rank == 4);
  for (const auto& d : s.diag) CHECK(d == 1);

  s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.diag == std::vector<Int>{2, 6, 12});
  CHECK(s.U * IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}} * s.V == s.D);
}

TEST_CASE("smith form multiplies back on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, r, c, 5);
    SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
    CHECK(s.rank == rank_q(a));
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

TEST_CASE("left solves") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve_left(a, vec_from({4, 9}));
  REQUIRE(x);
  CHECK(row_times(*x, a) == vec_from({4, 9}));
  CHECK_FALSE(solve_left(a, vec_from({1, 0})));
  CHECK_FALSE(solve_left(IntMatrix{{2, 2}}, vec_from({1, 1})));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 4);
    IntVector s = random_matrix(rng, 1, m.rows(), 3).row(0);
    IntVector v = row_times(s, m);
    auto sol = solve_left(m, v);
    REQUIRE(sol);
    CHECK(row_times(*sol, m) == v);
  }
}

TEST_CASE("left kernel") {
  IntMatrix a{{1, 2}, {2, 4}, {3, 6}};
  IntMatrix k = left_kernel_basis(a);
  CHECK(k.rows() == 2);
  CHECK((k * a).is_zero());
  CHECK(left_kernel_basis(IntMatrix::identity(3)).rows() == 0);
}

TEST_CASE("cokernel structure") {
  CokernelStructure c = cokernel(IntMatrix{{2}});
  CHECK(c.free_rank == 0);
  CHECK(c.torsion == std::vector<Int>{2});

  c = cokernel(IntMatrix{{2, 0}, {0, 3}});
  CHECK(c.free_rank == 0);
  CHECK(c.torsion == std::vector<Int>{6});

  c = cokernel(IntMatrix{{2, 0, 0}});
  CHECK(c.free_rank == 2);
  CHECK(c.torsion == std::vector<Int>{2});
  REQUIRE(c.certificates.rows() == 1);
  const std::size_t g = c.certificate_rows[0];
  CHECK(row_times(c.certificates.row(0), IntMatrix{{2, 0, 0}}) == [&] {
    IntVector v = c.generators.row(g);
    for (auto& x : v) x *= c.orders[g];
    return v;
  }());
}

TEST_CASE("torsion order equals the index of a full-rank lattice") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, n, n, 4);
    const Int det = determinant(a);
    if (det == 0) continue;
    CokernelStructure c = cokernel(a);
    CHECK(c.free_rank == 0);
    Int prod = 1;
    for (const auto& d : c.torsion) prod *= d;
    CHECK(prod == abs(det));
  }
}

TEST_CASE("order in quotient") {
  IntMatrix a{{2, 0}, {0, 3}};
  CHECK(order_in_quotient(a, vec_from({1, 0})) == Int(2));
  CHECK(order_in_quotient(a, vec_from({1, 1})) == Int(6));
  CHECK(order_in_quotient(a, vec_from({2, 3})) == Int(1));
  CHECK_FALSE(order_in_quotient(IntMatrix{{2, 0}}, vec_from({0, 1})).has_value());
}

TEST_CASE("torsion bookkeeping") {
  CHECK(invariant_factors({2, 3}) == std::vector<Int>{6});
  CHECK(elementary_divisors({6}) == std::vector<Int>{2, 3});
  std::vector<Int> tf(12, Int(2));
  tf.insert(tf.end(), 4, Int(4));
  CHECK(group_torsion(tf) == "2^12·4^4");
  CHECK(group_torsion({}) == "0");
}
