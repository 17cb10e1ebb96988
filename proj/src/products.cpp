#include "rotor/products.hpp"

#include <algorithm>

namespace rotor {

std::string to_string(ProductFlavor f) {
  switch (f) {
    case ProductFlavor::General: return "general";
    case ProductFlavor::FreeFree: return "free-free";
    case ProductFlavor::TorsionFree: return "torsion-free";
    case ProductFlavor::TorsionTorsion: return "torsion-torsion";
  }
  return "?";
}

ProductFlavor parse_flavor(const std::string& s) {
  for (auto f : {ProductFlavor::General, ProductFlavor::FreeFree, ProductFlavor::TorsionFree,
                 ProductFlavor::TorsionTorsion})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown product flavor " + s);
}

RotorCode tensor_product(const ProductInput& in, const std::string& name) {
  const IntMatrix& dc = in.dc;
  const IntMatrix& dd = in.dd;
  const std::size_t rC = dc.rows(), cC = dc.cols(), rD = dd.rows(), cD = dd.cols();
  IntMatrix hx = hstack(kron(dc, IntMatrix::identity(rD)), -kron(IntMatrix::identity(rC), dd));
  IntMatrix hz = hstack(kron(IntMatrix::identity(cC), dd.transpose()), kron(dc.transpose(), IntMatrix::identity(cD)));
  return make_code(name, hx, hz, {{"family", "product"}, {"flavor", to_string(in.flavor)}});
}

namespace {

std::size_t left_kernel_rank(const IntMatrix& a) { return a.rows() - rank_q(a); }

IntVector kron_row(const IntVector& a, const IntVector& b) {
  IntVector out;
  out.reserve(a.size() * b.size());
  for (const Int& x : a)
    for (const Int& y : b) out.push_back(x * y);
  return out;
}

IntVector concat(const IntVector& a, const IntVector& b) {
  IntVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

IntVector scaled(const IntVector& v, const Int& s) {
  IntVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

// Homology of the single-map complexes Z^{r} --dc--> Z^{c} (as X checks)
// and Z^{c_D} <--dd^T-- (as Z checks) give the factor generator data.
Homology factor_c(const IntMatrix& dc) { return compute_homology(make_complex(dc, IntMatrix(0, dc.cols()))); }
Homology factor_d(const IntMatrix& dd) { return compute_homology(make_complex(IntMatrix(0, dd.rows()), dd.transpose())); }

ProductLogicals block_first(const Homology& hc, const Homology& hd, std::size_t second_block) {
  ProductLogicals out;
  const std::size_t width = hc.lx.cols() * hd.lx.cols() + second_block;
  out.lx = IntMatrix(0, width);
  out.lz = IntMatrix(0, width);
  IntVector zeros(second_block, Int(0));
  for (std::size_t i = 0; i < hc.k(); ++i)
    for (std::size_t j = 0; j < hd.k(); ++j) {
      out.lx.append_row(concat(kron_row(hc.lx.row(i), hd.lx.row(j)), zeros));
      out.lz.append_row(concat(kron_row(hc.lz.row(i), hd.lz.row(j)), zeros));
      out.orders.push_back(hc.orders[i]);
    }
  return out;
}

}  // namespace

ProductLogicals product_logicals(const ProductInput& in) {
  const IntMatrix& dc = in.dc;
  const IntMatrix& dd = in.dd;
  const std::size_t second = dc.rows() * dd.cols();
  switch (in.flavor) {
    case ProductFlavor::General: {
      RotorCode code = tensor_product(in);
      return ProductLogicals{code.lx(), code.lz(), code.homology.orders};
    }
    case ProductFlavor::FreeFree: {
      if (left_kernel_rank(dc) != 0) throw FactorStructureViolation("free-free: first factor must have full row rank");
      if (!cokernel(dc).torsion.empty() || !cokernel(dd).torsion.empty())
        throw FactorStructureViolation("free-free: factors must be torsion free");
      return block_first(factor_c(dc), factor_d(dd), second);
    }
    case ProductFlavor::TorsionFree: {
      if (left_kernel_rank(dc) != 0) throw FactorStructureViolation("torsion-free: first factor must have full row rank");
      if (cokernel(dc).torsion.empty()) throw FactorStructureViolation("torsion-free: first factor has no torsion");
      if (!cokernel(dd).torsion.empty()) throw FactorStructureViolation("torsion-free: second factor must be torsion free");
      return block_first(factor_c(dc), factor_d(dd), second);
    }
    case ProductFlavor::TorsionTorsion: break;
  }

  if (left_kernel_rank(dc) != 0 || left_kernel_rank(dd) != 0)
    throw FactorStructureViolation("torsion-torsion: both factors must have full row rank");
  CokernelStructure cc = cokernel(dc), cd = cokernel(dd);
  CokernelStructure ccT = cokernel(dc.transpose()), cdT = cokernel(dd.transpose());
  if (cc.free_rank != 0 || cd.free_rank != 0 || cc.torsion.empty() || cd.torsion.empty())
    throw FactorStructureViolation("torsion-torsion: both cokernels must be finite and nontrivial");
  for (const Int& d : cc.torsion)
    for (const Int& p : cd.torsion)
      if (gcd(d, p) == 1)
        throw FactorStructureViolation("torsion-torsion: coprime torsion pair (" + d.get_str() + ", " + p.get_str() +
                                       ") gives a trivial logical");

  const std::size_t width = dc.cols() * dd.rows() + second;
  ProductLogicals out;
  out.lx = IntMatrix(0, width);
  out.lz = IntMatrix(0, width);
  for (std::size_t i = 0; i < cc.torsion.size(); ++i)
    for (std::size_t j = 0; j < cd.torsion.size(); ++j) {
      const Int d = cc.orders[cc.certificate_rows[i]];
      const Int p = cd.orders[cd.certificate_rows[j]];
      const Int g = gcd(d, p);
      const IntVector e_c = cc.generators.row(cc.certificate_rows[i]);
      const IntVector c_c = cc.certificates.row(i);
      const IntVector f_d = cd.generators.row(cd.certificate_rows[j]);
      const IntVector k_d = cd.certificates.row(j);
      out.lx.append_row(concat(scaled(kron_row(e_c, k_d), d / g), scaled(kron_row(c_c, f_d), -(p / g))));

      Bezout b = bezout_min(d, p);
      const IntVector eps = ccT.generators.row(ccT.certificate_rows[i]);
      const IntVector gam = ccT.certificates.row(i);
      const IntVector eta = cdT.generators.row(cdT.certificate_rows[j]);
      const IntVector kap = cdT.certificates.row(j);
      out.lz.append_row(concat(scaled(kron_row(gam, eta), b.u), scaled(kron_row(eps, kap), b.v)));
      out.orders.push_back(g);
    }
  return out;
}

AbelianGroup kunneth_prediction(const IntMatrix& dc, const IntMatrix& dd) {
  CokernelStructure cc = cokernel(dc), cd = cokernel(dd);
  AbelianGroup cok_c = make_group(cc.free_rank, cc.torsion);
  AbelianGroup cok_d = make_group(cd.free_rank, cd.torsion);
  AbelianGroup ker_c = make_group(left_kernel_rank(dc), {});
  AbelianGroup ker_d = make_group(left_kernel_rank(dd), {});
  return direct_sum(direct_sum(tensor(ker_c, cok_d), tensor(cok_c, ker_d)), tor(cok_c, cok_d));
}

bool generates_homology(const RotorCode& code, const IntMatrix& rows) {
  const std::size_t k = code.num_logicals();
  IntMatrix lattice(0, k);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    XClassification c = classify_x(code, rows.row(r));
    if (c.kind == OpKind::NonCommuting) return false;
    lattice.append_row(c.coordinates);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(code.homology.orders[j]) == 0) continue;
    IntVector e(k, Int(0));
    e[j] = code.homology.orders[j];
    lattice.append_row(e);
  }
  if (k == 0) return true;
  CokernelStructure q = cokernel(lattice);
  return q.free_rank == 0 && q.torsion.empty();
}

Bezout bezout_min(const Int& d, const Int& p) {
  Int g = gcd(d, p);
  Int period = p / g;
  for (Int u = 0; u < period || (period == 0 && u == 0); ++u) {
    Int r = u * d - g;
    if (sgn(p) == 0) break;
    if (r % p == 0) return Bezout{u, r / p, g};
  }
  throw std::invalid_argument("no Bezout coefficients");
}

IntMatrix hamming_h() {
  return IntMatrix{{1, 1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 0, 0, 1}, {1, 0, 1, 1, 1, 0, 0}};
}

IntMatrix hamming_g() {
  return IntMatrix{{1, 0, 0, 0, -1, -1, 0}, {0, 1, 0, 0, 0, -1, -1}, {0, 0, 1, 0, -1, -1, -1}, {0, 0, 0, 1, -1, 0, -1}};
}

IntMatrix hamming_e() {
  return IntMatrix{{1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}};
}

IntMatrix hamming_square() {
  IntMatrix h = hamming_h();
  return mod_matrix(h.transpose() * h, Int(2));
}

IntMatrix named_factor(const std::string& name) {
  if (name == "hamming743") return hamming_h();
  if (name == "hamming743T") return hamming_h().transpose();
  if (name == "hamming743sq") return hamming_square();
  // repetition:N and twisted-repetition:N
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string base = name.substr(0, colon);
    const long n = std::stol(name.substr(colon + 1));
    if (n < 2) throw std::invalid_argument("factor size must be at least 2");
    if (base == "repetition") {
      IntMatrix m(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n));
      for (long i = 0; i + 1 < n; ++i) {
        m(i, i) = 1;
        m(i, i + 1) = -1;
      }
      return m;
    }
    if (base == "twisted-repetition") {
      IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (long i = 0; i + 1 < n; ++i) {
        m(i, i) = 1;
        m(i, i + 1) = -1;
      }
      m(n - 1, 0) = 1;
      m(n - 1, n - 1) = 1;
      return m;
    }
  }
  throw std::invalid_argument("unknown factor " + name);
}

RotorCode hamming_free_free() {
  RotorCode c = tensor_product({hamming_h(), hamming_h().transpose(), ProductFlavor::FreeFree}, "hamming_free_free");
  c.meta["family"] = "hamming_free_free";
  return c;
}

RotorCode hamming_torsion_free() {
  RotorCode c = tensor_product({hamming_square(), hamming_h().transpose(), ProductFlavor::TorsionFree}, "hamming_torsion_free");
  c.meta["family"] = "hamming_torsion_free";
  return c;
}

RotorCode hamming_torsion_torsion() {
  RotorCode c = tensor_product({hamming_square(), hamming_square(), ProductFlavor::TorsionTorsion}, "hamming_torsion_torsion");
  c.meta["family"] = "hamming_torsion_torsion";
  return c;
}

}  // namespace rotor
