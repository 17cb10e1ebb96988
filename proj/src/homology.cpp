#include "rotor/homology.hpp"

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rotor {

ChainComplex make_complex(IntMatrix hx, IntMatrix hz) {
  if (hx.cols() != hz.cols() && !(hz.rows() == 0) && !(hx.rows() == 0))
    throw std::invalid_argument("H_X and H_Z must have the same number of columns");
  if (hz.rows() == 0 && hz.cols() != hx.cols()) hz = IntMatrix(0, hx.cols());
  if (hx.rows() == 0 && hx.cols() != hz.cols()) hx = IntMatrix(0, hz.cols());
  const IntMatrix prod = hx * hz.transpose();
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (sgn(prod(i, j)) != 0)
        throw CssViolation("H_X * H_Z^T is not zero: X check " + std::to_string(i) + " and Z check " +
                           std::to_string(j) + " overlap with inner product " + prod(i, j).get_str());
  return ChainComplex{std::move(hx), std::move(hz)};
}

namespace {

// Builds dual Z rows for the given lifts; returns false if some system has
// no integral solution. With `modular`, a torsion row of order d only needs
// lz_j . lx_i = delta_ij mod d, which always has a solution: an exact dual
// fails when a torsion lift is not primitive in Z^n.
bool solve_dual_rows(const ChainComplex& c, const IntMatrix& lx, const std::vector<Int>& orders, IntMatrix& lz,
                     bool modular) {
  const std::size_t n = c.n(), k = lx.rows(), rx = c.hx.rows();
  lz = IntMatrix(k, n);
  std::map<Int, std::vector<std::size_t>> by_order;
  for (std::size_t j = 0; j < k; ++j) by_order[orders[j]].push_back(j);

  for (const auto& [d, idx] : by_order) {
    const bool torsion = sgn(d) != 0;
    const std::size_t extra = torsion ? rx : 0;
    const std::size_t slack = torsion && modular ? k : 0;
    IntMatrix b(n + extra + slack, k + rx);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) b(i, j) = lx(j, i);
      for (std::size_t j = 0; j < rx; ++j) b(i, k + j) = c.hx(j, i);
    }
    for (std::size_t j = 0; j < extra; ++j) b(n + j, k + j) = -d;
    for (std::size_t j = 0; j < slack; ++j) b(n + extra + j, j) = -d;
    LatticeSolver solver(b);

    IntMatrix kern = left_kernel_basis(b);
    IntMatrix shifts = kern.col_range(0, n);
    HermiteForm shift_hnf = hermite_normal_form(shifts);

    for (std::size_t j : idx) {
      IntVector rhs(k + rx, Int(0));
      rhs[j] = 1;
      auto u = solver.solve(rhs);
      if (!u) return false;
      IntVector z(u->begin(), u->begin() + static_cast<long>(n));
      lz.set_row(j, reduce_mod_hnf(z, shift_hnf));
    }
  }
  return true;
}

void verify_homology(const ChainComplex& c, const Homology& h) {
  const std::size_t k = h.k();
  IntMatrix pairing = h.lx * h.lz.transpose();
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      const Int off = pairing(i, j) - Int(i == j ? 1 : 0);
      if (sgn(h.orders[j]) == 0 ? sgn(off) != 0 : off % h.orders[j] != 0)
        throw std::logic_error("logical pairing is not the identity");
    }
  if (c.hz.rows() && !(h.lx * c.hz.transpose()).is_zero())
    throw std::logic_error("X logical rows do not commute with Z checks");
  IntMatrix comm = h.lz * c.hx.transpose();
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < comm.cols(); ++i) {
      const Int& v = comm(j, i);
      if (sgn(h.orders[j]) == 0 ? sgn(v) != 0 : v % h.orders[j] != 0)
        throw std::logic_error("Z logical rows do not commute with X checks");
    }
  for (std::size_t t = 0; t < h.certificate_rows.size(); ++t) {
    std::size_t g = h.certificate_rows[t];
    IntVector lhs = row_times(h.certificates.row(t), c.hx);
    IntVector rhs = h.lx.row(g);
    for (auto& x : rhs) x *= h.orders[g];
    if (lhs != rhs) throw std::logic_error("torsion certificate mismatch");
  }
}

}  // namespace

Homology compute_homology(const ChainComplex& c) {
  const std::size_t n = c.n();
  IntMatrix kernel = left_kernel_basis(c.hz.transpose());
  if (c.hz.rows() == 0) kernel = IntMatrix::identity(n);
  const std::size_t k0 = kernel.rows();

  // Express H_X rows in kernel coordinates.
  IntMatrix rel(c.hx.rows(), k0);
  {
    LatticeSolver in_kernel(kernel);
    for (std::size_t i = 0; i < c.hx.rows(); ++i) {
      auto coords = in_kernel.solve(c.hx.row(i));
      if (!coords) throw CssViolation("H_X row outside ker(H_Z^T)");
      rel.set_row(i, *coords);
    }
  }
  CokernelStructure cok = cokernel(rel);

  Homology h;
  h.free_rank = cok.free_rank;
  h.torsion = cok.torsion;
  h.orders = cok.orders;
  h.certificate_rows = cok.certificate_rows;
  IntMatrix raw_lx = cok.generators * kernel;
  IntMatrix raw_cert = cok.certificates.rows() ? cok.certificates : IntMatrix(0, c.hx.rows());
  if (cok.generators.rows() == 0) raw_lx = IntMatrix(0, n);

  // Prefer lifts reduced modulo the X-check lattice; fall back to the raw
  // lifts if no exactly dual Z rows exist for the reduced ones.
  IntMatrix red_lx = raw_lx, red_cert = raw_cert;
  if (c.hx.rows() > 0 && raw_lx.rows() > 0) {
    HermiteForm hx_hnf = hermite_normal_form(c.hx);
    IntMatrix w_rows = hx_hnf.W.row_range(0, hx_hnf.rank);
    for (std::size_t g = 0; g < raw_lx.rows(); ++g) {
      IntVector coeff;
      red_lx.set_row(g, reduce_mod_hnf(raw_lx.row(g), hx_hnf, &coeff));
      for (std::size_t t = 0; t < h.certificate_rows.size(); ++t) {
        if (h.certificate_rows[t] != g || hx_hnf.rank == 0) continue;
        IntVector shift = row_times(coeff, w_rows);
        IntVector cert = red_cert.row(t);
        for (std::size_t j = 0; j < cert.size(); ++j) cert[j] -= h.orders[g] * shift[j];
        red_cert.set_row(t, cert);
      }
    }
  }
  IntMatrix lz;
  if (solve_dual_rows(c, red_lx, h.orders, lz, false)) {
    h.lx = red_lx;
    h.certificates = red_cert;
  } else if (solve_dual_rows(c, raw_lx, h.orders, lz, false)) {
    h.lx = raw_lx;
    h.certificates = raw_cert;
  } else if (solve_dual_rows(c, red_lx, h.orders, lz, true)) {
    h.lx = red_lx;
    h.certificates = red_cert;
  } else {
    throw std::logic_error("no integral dual logical rows");
  }
  h.lz = lz;
  if (h.lx.rows() == 0) {
    h.lx = IntMatrix(0, n);
    h.lz = IntMatrix(0, n);
  }
  verify_homology(c, h);
  return h;
}

ModPHomology homology_mod_p(const ChainComplex& c, long p) {
  const std::size_t rx = rank_mod_p(c.hx, p), rz = rank_mod_p(c.hz, p);
  ModPHomology m;
  m.p = p;
  m.h2 = c.hx.rows() - rx;
  m.h1 = c.n() - rx - rz;
  m.h0 = c.hz.rows() - rz;
  return m;
}

Betti betti_real(const ChainComplex& c) {
  const std::size_t rx = rank_q(c.hx), rz = rank_q(c.hz);
  return Betti{c.hz.rows() - rz, c.n() - rx - rz, c.hx.rows() - rx};
}

std::size_t predicted_mod_p_h1(const ChainComplex& c, long p) {
  Homology h = compute_homology(c);
  std::size_t count = h.free_rank;
  for (const Int& t : h.torsion)
    if (t % p == 0) ++count;
  if (c.hz.rows() > 0)
    for (const Int& t : cokernel(c.hz.transpose()).torsion)
      if (t % p == 0) ++count;
  return count;
}

std::vector<Int> cohomology_h2_torsion(const ChainComplex& c) {
  if (c.hx.rows() == 0) return {};
  return cokernel(c.hx.transpose()).torsion;
}

OrientationReport classify_orientation(const ChainComplex& c) {
  OrientationReport r;
  const std::size_t faces = c.hx.rows(), n = c.n();
  std::vector<std::array<std::size_t, 2>> ends(n);
  std::vector<std::array<int, 2>> signs(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < faces; ++i) {
      const Int& v = c.hx(i, j);
      if (sgn(v) == 0) continue;
      if (abs(v) != 1 || cnt == 2) return r;
      ends[j][cnt] = i;
      signs[j][cnt] = sgn(v);
      ++cnt;
    }
    if (cnt != 2) return r;
  }
  r.surface_like = true;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(faces);
  for (std::size_t j = 0; j < n; ++j) {
    // s_b = -s_a * x_a / x_b keeps column j balanced
    int rel = -signs[j][0] * signs[j][1];
    adj[ends[j][0]].push_back({ends[j][1], rel});
    adj[ends[j][1]].push_back({ends[j][0], rel});
  }
  std::vector<int> s(faces, 0);
  bool consistent = true;
  std::size_t seen = 0;
  if (faces > 0) {
    std::vector<std::size_t> stack{0};
    s[0] = 1;
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      ++seen;
      for (auto [g, rel] : adj[f]) {
        int want = s[f] * rel;
        if (s[g] == 0) {
          s[g] = want;
          stack.push_back(g);
        } else if (s[g] != want) {
          consistent = false;
        }
      }
    }
  }
  r.connected = seen == faces;
  r.orientable = r.connected && consistent;
  return r;
}

AbelianGroup make_group(std::size_t free_rank, const std::vector<Int>& cyclic) {
  std::vector<Int> nontrivial;
  for (const Int& x : cyclic)
    if (x != 1) nontrivial.push_back(x);
  return AbelianGroup{free_rank, invariant_factors(nontrivial)};
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> cyc;
  for (std::size_t i = 0; i < b.free_rank; ++i) cyc.insert(cyc.end(), a.torsion.begin(), a.torsion.end());
  for (std::size_t i = 0; i < a.free_rank; ++i) cyc.insert(cyc.end(), b.torsion.begin(), b.torsion.end());
  for (const Int& x : a.torsion)
    for (const Int& y : b.torsion) cyc.push_back(gcd(x, y));
  return make_group(a.free_rank * b.free_rank, cyc);
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> cyc;
  for (const Int& x : a.torsion)
    for (const Int& y : b.torsion) cyc.push_back(gcd(x, y));
  return make_group(0, cyc);
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> cyc = a.torsion;
  cyc.insert(cyc.end(), b.torsion.begin(), b.torsion.end());
  return make_group(a.free_rank + b.free_rank, cyc);
}

}  // namespace rotor
