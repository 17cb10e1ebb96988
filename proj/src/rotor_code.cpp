#include "rotor/rotor_code.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rotor {

RotorCode make_code(std::string name, IntMatrix hx, IntMatrix hz, std::map<std::string, std::string> meta) {
  RotorCode c;
  c.name = std::move(name);
  c.complex = make_complex(std::move(hx), std::move(hz));
  c.homology = compute_homology(c.complex);
  c.meta = std::move(meta);
  return c;
}

Rational frac_part(const Rational& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

PhaseVector PhaseVector::exact(std::vector<Rational> turns) {
  PhaseVector p;
  p.exact_ = true;
  for (auto& t : turns) {
    t.canonicalize();
    t = frac_part(t);
    p.radians_.push_back(2.0 * std::numbers::pi * t.get_d());
  }
  p.turns_ = std::move(turns);
  return p;
}

PhaseVector PhaseVector::radians(std::vector<double> values) {
  PhaseVector p;
  p.exact_ = false;
  p.radians_ = std::move(values);
  return p;
}

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::NonCommuting: return "non-commuting";
    case OpKind::Stabilizer: return "stabilizer";
    case OpKind::Logical: return "logical";
  }
  return "?";
}

IntVector x_syndrome(const RotorCode& code, const IntVector& v) {
  if (v.size() != code.n()) throw std::invalid_argument("X vector length mismatch");
  if (code.hz().rows() == 0) return {};
  return row_times(v, code.hz().transpose());
}

std::vector<Rational> z_syndrome(const RotorCode& code, const PhaseVector& phi) {
  if (!phi.is_exact()) throw std::invalid_argument("exact phases required");
  if (phi.size() != code.n()) throw std::invalid_argument("phase vector length mismatch");
  const IntMatrix& hx = code.hx();
  std::vector<Rational> s(hx.rows());
  for (std::size_t i = 0; i < hx.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < hx.cols(); ++j)
      if (sgn(hx(i, j)) != 0) acc += Rational(hx(i, j)) * phi.turns()[j];
    s[i] = frac_part(acc);
  }
  return s;
}

namespace {

Int reduce_coord(const Int& x, const Int& order) {
  if (sgn(order) == 0) return x;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), order.get_mpz_t());
  return r;
}

}  // namespace

XClassification classify_x(const RotorCode& code, const IntVector& v) {
  XClassification out;
  out.syndrome = x_syndrome(code, v);
  if (!is_zero(out.syndrome)) return out;
  const IntMatrix stacked = vstack(code.lx(), code.hx());
  auto sol = solve_left(stacked, v);
  if (!sol) throw std::logic_error("zero-syndrome vector outside the logical+stabilizer lattice");
  const auto& ord = code.homology.orders;
  bool trivial = true;
  for (std::size_t j = 0; j < ord.size(); ++j) {
    Int c = reduce_coord((*sol)[j], ord[j]);
    if (sgn(c) != 0) trivial = false;
    out.coordinates.push_back(c);
  }
  out.kind = trivial ? OpKind::Stabilizer : OpKind::Logical;
  return out;
}

std::vector<Int> class_coordinates(const RotorCode& code, const IntVector& v) {
  const auto& ord = code.homology.orders;
  std::vector<Int> out(ord.size());
  for (std::size_t j = 0; j < ord.size(); ++j) out[j] = reduce_coord(dot(v, code.lz().row(j)), ord[j]);
  return out;
}

ZClassification classify_z(const RotorCode& code, const PhaseVector& phi) {
  ZClassification out;
  out.syndrome = z_syndrome(code, phi);
  for (const auto& s : out.syndrome)
    if (s != 0) return out;

  const std::size_t n = code.n();
  const auto& ord = code.homology.orders;
  std::vector<Rational> residual = phi.turns();
  bool trivial = true;
  for (std::size_t j = 0; j < ord.size(); ++j) {
    Rational theta = 0;
    for (std::size_t i = 0; i < n; ++i) theta += Rational(code.lx()(j, i)) * phi.turns()[i];
    theta = frac_part(theta);
    if (sgn(ord[j]) != 0) {
      Rational scaled = theta * Rational(ord[j]);
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw std::logic_error("torsion logical phase is not a multiple of 1/d");
    }
    if (theta != 0) trivial = false;
    out.logical_phases.push_back(theta);
    for (std::size_t i = 0; i < n; ++i) residual[i] -= theta * Rational(code.lz()(j, i));
  }

  // The residual must lie in rowspace_R(H_Z) + Z^n. With U H_Z V = D this
  // holds iff the coordinates of residual*V beyond the rank are integral.
  const IntMatrix& hz = code.hz();
  if (hz.rows() == 0) {
    for (auto& r : residual)
      if (frac_part(r) != 0) throw std::logic_error("phase residual is not a Z stabilizer");
  } else {
    SmithForm s = smith_normal_form(hz);
    std::vector<Rational> rv(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(s.V(i, j)) != 0) rv[j] += residual[i] * Rational(s.V(i, j));
    for (std::size_t j = s.rank; j < n; ++j) {
      rv[j].canonicalize();
      if (rv[j].get_den() != 1) throw std::logic_error("phase residual is not a Z stabilizer");
    }
    // nu U^{-1} D = (residual - t) V with t chosen to cancel the tail;
    // y_i = rv_i / d_i and nu = y U.
    std::vector<Rational> y(hz.rows(), Rational(0));
    for (std::size_t i = 0; i < s.rank; ++i) y[i] = rv[i] / Rational(s.diag[i]);
    out.stabilizer_part.assign(hz.rows(), Rational(0));
    for (std::size_t i = 0; i < hz.rows(); ++i)
      for (std::size_t j = 0; j < hz.rows(); ++j)
        if (sgn(s.U(i, j)) != 0) out.stabilizer_part[j] += y[i] * Rational(s.U(i, j));
    for (auto& x : out.stabilizer_part) x = frac_part(x);
  }
  out.kind = trivial ? OpKind::Stabilizer : OpKind::Logical;
  return out;
}

std::size_t QuditReduction::surviving_count() const {
  std::size_t c = 0;
  for (bool b : survives) c += b;
  return c;
}

bool nontrivial_mod(const RotorCode& code, const IntVector& v, long d) {
  IntMatrix lattice = vstack(code.hx(), scale(IntMatrix::identity(code.n()), Int(d)));
  return !solve_left(lattice, v).has_value();
}

QuditReduction qudit_reduce(const RotorCode& code, long d) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be at least 2");
  QuditReduction q;
  q.d = d;
  q.hx_mod = mod_matrix(code.hx(), Int(d));
  q.hz_mod = mod_matrix(code.hz(), Int(d));
  IntMatrix lattice = vstack(code.hx(), scale(IntMatrix::identity(code.n()), Int(d)));
  LatticeSolver solver(lattice);
  for (std::size_t i = 0; i < code.lx().rows(); ++i) q.survives.push_back(!solver.contains(code.lx().row(i)));
  return q;
}

RotorCode change_of_variables(const RotorCode& code, const IntMatrix& m) {
  if (m.rows() != code.n() || m.cols() != code.n()) throw std::invalid_argument("change of variables has wrong size");
  IntMatrix inv_t = unimodular_inverse(m).transpose();
  IntMatrix hz = code.hz().rows() ? code.hz() * inv_t : IntMatrix(0, code.n());
  IntMatrix hx = code.hx().rows() ? code.hx() * m : IntMatrix(0, code.n());
  return make_code(code.name + "'", hx, hz, code.meta);
}

}  // namespace rotor
