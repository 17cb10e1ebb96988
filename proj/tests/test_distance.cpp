#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "rotor/constructions.hpp"
#include "rotor/distance.hpp"

using namespace rotor;

namespace {

constexpr double kPi = std::numbers::pi;

// Visits every integer vector with sum |v_i| <= budget.
void for_each_small(std::size_t n, long budget, const std::function<void(const IntVector&)>& f) {
  IntVector v(n, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      f(v);
      return;
    }
    for (long x = -left; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - std::labs(x));
    }
    v[i] = 0;
  };
  rec(0, budget);
}

long brute_force_dx(const RotorCode& c, long cap) {
  long best = cap + 1;
  for_each_small(c.n(), cap, [&](const IntVector& v) {
    const long w = weight_x(v);
    if (w == 0 || w >= best) return;
    if (classify_x(c, v).kind == OpKind::Logical) best = w;
  });
  return best;
}

// Minimal Hamming weight of v in Z_l^n with H_Z v = 0 mod l and v
// nontrivial mod l.
long brute_force_qudit(const RotorCode& c, long l, long cap) {
  const std::size_t n = c.n();
  long best = cap + 1;
  IntVector v(n, Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
    if (used >= best) return;
    if (i == n) {
      if (used == 0) return;
      IntVector s = x_syndrome(c, v);
      for (const auto& x : s)
        if (x % l != 0) return;
      if (nontrivial_mod(c, v, l)) best = used;
      return;
    }
    for (long x = 0; x < l; ++x) {
      v[i] = x;
      rec(i + 1, used + (x != 0));
    }
    v[i] = 0;
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("exact X distance agrees with brute force on small codes") {
  const std::vector<RotorCode> codes{rp2_1(), rp2_4(), rp2_9(), thin_moebius(3), thin_moebius(5), thin_moebius(6),
                                     torus2(2, 2), torus2(2, 3), moebius(1, 5)};
  for (const auto& c : codes) {
    REQUIRE(c.n() <= 12);
    XDistance d = x_distance_exact(c, 6);
    REQUIRE_MESSAGE(d.d.has_value(), c.name);
    CHECK_MESSAGE(*d.d == brute_force_dx(c, *d.d), c.name);
    CHECK(weight_x(d.witness) == *d.d);
    IntVector w;
    for (auto x : d.witness) w.emplace_back(static_cast<long>(x));
    CHECK(classify_x(c, w).kind == OpKind::Logical);
  }
}

TEST_CASE("known X distances") {
  CHECK(*x_distance_exact(rp2_4(), 4).d == 2);
  CHECK(*x_distance_exact(rp2_9(), 4).d == 3);
  CHECK(*x_distance_exact(thin_moebius(7), 4).d == 2);
  CHECK(*x_distance_exact(torus2(3, 4), 5).d == 3);
  XDistance none = x_distance_exact(rp2_9(), 2);
  CHECK_FALSE(none.d.has_value());
  CHECK(none.searched_up_to == 2);
}

TEST_CASE("qudit distances agree with brute force") {
  for (const RotorCode& c : {rp2_4(), rp2_9(), thin_moebius(4)})
    for (long l : {2L, 3L, 4L}) {
      auto q = qudit_x_distance(c, l, 5);
      const long bf = brute_force_qudit(c, l, 5);
      if (bf > 5)
        CHECK_FALSE(q.has_value());
      else
        CHECK_MESSAGE(q == bf, c.name << " l=" << l);
    }
}

TEST_CASE("closed form matches the numerical spread minimum") {
  for (long n = 1; n <= 8; ++n)
    for (double a : {kPi, kPi / 2, 0.1}) {
      const double cf = spread_min_closed_form(n, a);
      CHECK(cf == doctest::Approx(n * std::pow(std::sin(a / (2.0 * n)), 2)));
      CHECK(std::abs(spread_min_numeric(n, a) - cf) < 1e-6);
    }
}

TEST_CASE("lower bound formula") {
  CHECK(z_lower_bound(std::vector<long>{2, 2}, kPi) == doctest::Approx(2.0));
  CHECK(z_lower_bound(std::vector<long>{3, 3, 3}, 0.0) == doctest::Approx(1.0));
  CHECK(z_lower_bound(std::vector<long>{1}, kPi / 3) == doctest::Approx(1.0));
  // Continuity at alpha -> 0.
  CHECK(z_lower_bound(std::vector<long>{2, 5}, 1e-6) == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("disjoint representatives are validated") {
  RotorCode c = thin_moebius(5);
  DisjointRepSet s = find_disjoint_reps(c, {Int(1)});
  std::string why;
  CHECK(valid_disjoint_reps(c, s, &why));
  CHECK(s.n_x() == 5);
  CHECK(s.d_x_max() == 2);

  DisjointRepSet dup = s;
  dup.reps.push_back(s.reps.front());
  CHECK_FALSE(valid_disjoint_reps(c, dup, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("Z distance sandwich on small codes") {
  for (long N = 2; N <= 6; ++N) {
    RotorCode c = thin_moebius(N);
    DisjointRepSet reps = find_disjoint_reps(c, {Int(1)});
    const double lower = z_lower_bound(reps, kPi);
    const double upper = z_upper_spread(c, 0, kPi).value;
    CHECK(lower == doctest::Approx(static_cast<double>(N)));
    CHECK(upper == doctest::Approx(static_cast<double>(N)).epsilon(1e-6));
  }
  RotorCode c = rp2_4();
  const double lower = z_lower_bound(find_disjoint_reps(c, {Int(1)}), kPi);
  const double upper = z_upper_spread(c, 0, kPi).value;
  CHECK(lower <= upper + 1e-9);
  CHECK(upper == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("spreading objective gradient") {
  RotorCode c = rp2_9();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> nu(c.hz().rows());
    for (auto& x : nu) x = u(rng);
    std::vector<double> grad;
    spread_objective(c, 0, kPi, nu, &grad);
    REQUIRE(grad.size() == nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const double h = 1e-6;
      std::vector<double> p = nu, m = nu;
      p[i] += h;
      m[i] -= h;
      const double fd = (spread_objective(c, 0, kPi, p) - spread_objective(c, 0, kPi, m)) / (2 * h);
      CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("rotor limit of a free logical") {
  RotorCode c = torus2(3, 3);
  const double lim = z_rotor_limit(c, 0);
  const double small = z_upper_spread(c, 0, 1e-3).value;
  CHECK(lim > 0);
  CHECK(small <= lim * (1 + 1e-3) + 1e-9);
  CHECK(z_lower_bound(find_disjoint_reps(c, {Int(1), Int(0)}), 0.0) <= lim + 1e-9);
}

TEST_CASE("weight model validation") {
  WeightModel m;
  CHECK(m.beta_z() == doctest::Approx(100.0));
  CHECK(m.beta_x() == doctest::Approx(-std::log(0.1)));
  m.p_jump = 1.5;
  CHECK_THROWS(m.validate());
}
