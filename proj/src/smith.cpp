#include "rotor/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rotor {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct SnfWork {
  IntMatrix D, U, V, Vi;

  void row_add(std::size_t dst, std::size_t src, const Int& f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    Vi.add_row_multiple(src, dst, -f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void row_negate(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  std::size_t t = 0;
  const std::size_t lim = std::min(m, n);
  while (t < lim) {
    bool found_any = true;
    for (;;) {
      // smallest absolute nonzero entry of the active block, row-major ties
      std::size_t pi = m, pj = n;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& x = w.D(i, j);
          if (sgn(x) == 0) continue;
          if (pi == m || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        found_any = false;
        break;
      }
      w.row_swap(t, pi);
      w.col_swap(t, pj);
      if (sgn(w.D(t, t)) < 0) w.row_negate(t);
      const Int p = w.D(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(w.D(i, t)) == 0) continue;
        w.row_add(i, t, -floor_div(w.D(i, t), p));
        if (sgn(w.D(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(w.D(t, j)) == 0) continue;
        w.col_add(j, t, -floor_div(w.D(t, j), p));
        if (sgn(w.D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(floor_mod(w.D(i, j), p)) != 0) {
            w.row_add(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!found_any) break;
    ++t;
  }
  SmithForm s;
  s.rank = t;
  for (std::size_t i = 0; i < t; ++i) s.diag.push_back(w.D(i, i));
  s.D = std::move(w.D);
  s.U = std::move(w.U);
  s.V = std::move(w.V);
  s.V_inv = std::move(w.Vi);
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m), {}, 0};
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(h.H(i, col)) != 0 && (piv == m || mpz_cmpabs(h.H(i, col).get_mpz_t(), h.H(piv, col).get_mpz_t()) < 0)) piv = i;
      if (piv == m) break;
      h.H.swap_rows(r, piv);
      h.W.swap_rows(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h.H(i, col)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h.H(i, col).get_mpz_t(), h.H(r, col).get_mpz_t());
        h.H.add_row_multiple(i, r, -q);
        h.W.add_row_multiple(i, r, -q);
        if (sgn(h.H(i, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h.H(r, col)) == 0) continue;
    if (sgn(h.H(r, col)) < 0) {
      h.H.negate_row(r);
      h.W.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.H(i, col), h.H(r, col));
      h.H.add_row_multiple(i, r, -q);
      h.W.add_row_multiple(i, r, -q);
    }
    h.pivot_cols.push_back(col);
    ++r;
  }
  h.rank = r;
  return h;
}

IntVector reduce_mod_hnf(const IntVector& v, const HermiteForm& h, IntVector* coeffs) {
  IntVector out = v;
  if (coeffs) coeffs->assign(h.rank, Int(0));
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t pc = h.pivot_cols[k];
    Int q = floor_div(out[pc], h.H(k, pc));
    if (sgn(q) == 0) continue;
    for (std::size_t j = pc; j < out.size(); ++j) out[j] -= q * h.H(k, j);
    if (coeffs) (*coeffs)[k] = q;
  }
  return out;
}

LatticeSolver::LatticeSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("solve: vector length mismatch");
  IntVector wv = row_times(v, snf_.V);
  IntVector y(rows_, Int(0));
  for (std::size_t i = 0; i < cols_; ++i) {
    if (i < snf_.rank) {
      if (sgn(floor_mod(wv[i], snf_.diag[i])) != 0) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), wv[i].get_mpz_t(), snf_.diag[i].get_mpz_t());
    } else if (sgn(wv[i]) != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, snf_.U);
}

std::optional<IntVector> solve_left(const IntMatrix& a, const IntVector& v) {
  return LatticeSolver(a).solve(v);
}

IntMatrix left_kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  IntMatrix k = s.U.row_range(s.rank, a.rows());
  if (k.rows() == 0) return IntMatrix(0, a.rows());
  HermiteForm h = hermite_normal_form(k);
  return h.H.row_range(0, h.rank);
}

CokernelStructure cokernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  SmithForm s = smith_normal_form(a);
  HermiteForm h = hermite_normal_form(a);
  IntMatrix w_rows = h.W.row_range(0, h.rank);

  CokernelStructure out;
  out.generators = IntMatrix(0, n);
  out.certificates = IntMatrix(0, a.rows());
  for (std::size_t i = s.rank; i < n; ++i) {
    out.generators.append_row(reduce_mod_hnf(s.V_inv.row(i), h));
    out.orders.push_back(0);
    ++out.free_rank;
  }
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Int& d = s.diag[i];
    if (d == 1) continue;
    IntVector c;
    IntVector g = reduce_mod_hnf(s.V_inv.row(i), h, &c);
    IntVector cert = s.U.row(i);
    if (h.rank > 0) {
      IntVector shift = row_times(c, w_rows);
      for (std::size_t j = 0; j < cert.size(); ++j) cert[j] -= d * shift[j];
    }
    out.certificate_rows.push_back(out.generators.rows());
    out.generators.append_row(g);
    out.orders.push_back(d);
    out.torsion.push_back(d);
    out.certificates.append_row(cert);
  }
  return out;
}

std::optional<Int> order_in_quotient(const IntMatrix& a, const IntVector& v) {
  SmithForm s = smith_normal_form(a);
  IntVector wv = row_times(v, s.V);
  Int ord = 1;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (i < s.rank) {
      Int r = floor_mod(wv[i], s.diag[i]);
      Int g = gcd(r, s.diag[i]);
      Int o = s.diag[i] / g;
      ord = lcm(ord, o);
    } else if (sgn(wv[i]) != 0) {
      return std::nullopt;
    }
  }
  return ord;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Int det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  SmithForm s = smith_normal_form(m);
  return s.V * s.U;
}

namespace {

std::map<Int, std::vector<unsigned>> prime_powers(const std::vector<Int>& orders) {
  std::map<Int, std::vector<unsigned>> by_prime;
  for (Int x : orders) {
    if (sgn(x) <= 0) throw std::invalid_argument("torsion orders must be positive");
    for (Int p = 2; p * p <= x; ++p) {
      unsigned e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (e) by_prime[p].push_back(e);
    }
    if (x > 1) by_prime[x].push_back(1);
  }
  return by_prime;
}

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  auto by_prime = prime_powers(cyclic_orders);
  std::size_t count = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<>());
    count = std::max(count, es.size());
  }
  std::vector<Int> out(count, Int(1));
  for (auto& [p, es] : by_prime)
    for (std::size_t k = 0; k < es.size(); ++k) out[count - 1 - k] *= ipow(p, es[k]);
  return out;
}

std::vector<Int> elementary_divisors(const std::vector<Int>& cyclic_orders) {
  std::vector<Int> out;
  for (auto& [p, es] : prime_powers(cyclic_orders))
    for (unsigned e : es) out.push_back(ipow(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::string group_torsion(const std::vector<Int>& cyclic_orders) {
  std::vector<Int> ed = elementary_divisors(cyclic_orders);
  if (ed.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ed.size();) {
    std::size_t j = i;
    while (j < ed.size() && ed[j] == ed[i]) ++j;
    if (!s.empty()) s += "\xC2\xB7";
    s += ed[i].get_str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string describe_group(std::size_t free_rank, const std::vector<Int>& torsion) {
  return "(" + std::to_string(free_rank) + "," + group_torsion(torsion) + ")";
}

}  // namespace rotor
