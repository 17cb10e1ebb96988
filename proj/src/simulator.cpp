#include "rotor/simulator.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

namespace rotor {

std::size_t max_dimension() {
  if (const char* env = std::getenv("ROTORCODES_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

std::size_t truncated_dimension(std::size_t n, long L) {
  if (L < 0) throw std::invalid_argument("truncation L must be nonnegative");
  const std::size_t base = static_cast<std::size_t>(2 * L + 1);
  const std::size_t cap = max_dimension();
  std::size_t d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d > cap / base) throw CapExceeded("(2L+1)^n = " + std::to_string(base) + "^" + std::to_string(n) +
                                          " exceeds the dimension cap " + std::to_string(cap));
    d *= base;
  }
  if (d > cap) throw CapExceeded("dimension exceeds the cap " + std::to_string(cap));
  return d;
}

std::size_t TruncatedState::index(const std::vector<long>& c) const {
  const std::size_t base = static_cast<std::size_t>(2 * L + 1);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < n; ++k) idx = idx * base + static_cast<std::size_t>(c[k] + L);
  return idx;
}

std::vector<long> TruncatedState::charges(std::size_t idx) const {
  const std::size_t base = static_cast<std::size_t>(2 * L + 1);
  std::vector<long> c(n);
  for (std::size_t k = n; k-- > 0;) {
    c[k] = static_cast<long>(idx % base) - L;
    idx /= base;
  }
  return c;
}

bool TruncatedState::inside(const std::vector<long>& c) const {
  for (long x : c)
    if (x < -L || x > L) return false;
  return true;
}

double TruncatedState::norm() const {
  double s = 0;
  for (const auto& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

void TruncatedState::normalize() {
  const double nr = norm();
  if (nr == 0) throw EmptySupport("cannot normalise the zero vector");
  for (auto& a : amp) a /= nr;
}

TruncatedState zero_state(std::size_t n, long L) {
  TruncatedState s;
  s.n = n;
  s.L = L;
  s.amp.assign(truncated_dimension(n, L), Complex(0));
  return s;
}

TruncatedState basis_state(std::size_t n, long L, const std::vector<long>& c) {
  TruncatedState s = zero_state(n, L);
  if (c.size() != n || !s.inside(c)) throw std::invalid_argument("basis state outside the truncation");
  s.amp[s.index(c)] = 1.0;
  return s;
}

namespace {

std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const Int& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("entry too large");
    out.push_back(x.get_si());
  }
  return out;
}

std::vector<std::vector<long>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_longs(m.row(i)));
  return out;
}

}  // namespace

TruncatedState codeword(const RotorCode& code, const std::vector<long>& mbar, long L, long box_radius) {
  const std::size_t n = code.n();
  if (mbar.size() != code.num_logicals()) throw std::invalid_argument("class coordinate length mismatch");
  if (box_radius < 0) throw std::invalid_argument("box radius must be nonnegative");
  TruncatedState s = zero_state(n, L);

  std::vector<long> base(n, 0);
  auto lx = rows_of(code.lx());
  for (std::size_t i = 0; i < mbar.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) base[j] += mbar[i] * lx[i][j];
  auto hx = rows_of(code.hx());
  const std::size_t r = hx.size();

  // (2B+1)^r coset labels; refuse absurd enumerations.
  double count = std::pow(2.0 * box_radius + 1.0, static_cast<double>(r));
  if (count > 5e7) throw CapExceeded("box_radius^r_x enumeration too large");

  std::set<std::size_t> support;
  std::vector<long> g(r, -box_radius), point(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) {
      long v = base[j];
      for (std::size_t i = 0; i < r; ++i) v += g[i] * hx[i][j];
      point[j] = v;
    }
    if (s.inside(point)) support.insert(s.index(point));
    std::size_t k = 0;
    while (k < r && g[k] == box_radius) g[k++] = -box_radius;
    if (k == r) break;
    ++g[k];
  }
  if (support.empty()) throw EmptySupport("no coset point fits inside the truncation");
  const double a = 1.0 / std::sqrt(static_cast<double>(support.size()));
  for (std::size_t idx : support) s.amp[idx] = a;
  return s;
}

TruncatedState apply_x(const TruncatedState& s, const std::vector<long>& m) {
  if (m.size() != s.n) throw std::invalid_argument("shift length mismatch");
  TruncatedState out = s;
  std::fill(out.amp.begin(), out.amp.end(), Complex(0));
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    if (s.amp[idx] == Complex(0)) continue;
    auto c = s.charges(idx);
    for (std::size_t k = 0; k < s.n; ++k) c[k] += m[k];
    if (s.inside(c))
      out.amp[s.index(c)] = s.amp[idx];
    else
      out.leakage += std::norm(s.amp[idx]);
  }
  return out;
}

TruncatedState apply_z(const TruncatedState& s, const std::vector<double>& phi) {
  if (phi.size() != s.n) throw std::invalid_argument("phase length mismatch");
  TruncatedState out = s;
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    if (s.amp[idx] == Complex(0)) continue;
    auto c = s.charges(idx);
    double t = 0;
    for (std::size_t k = 0; k < s.n; ++k) t += phi[k] * static_cast<double>(c[k]);
    out.amp[idx] *= std::polar(1.0, t);
  }
  return out;
}

Complex inner(const TruncatedState& a, const TruncatedState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
  Complex s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

Complex expect_stabilizer_x(const TruncatedState& s, const RotorCode& code, std::size_t j) {
  if (j >= code.hx().rows()) throw std::out_of_range("X check index out of range");
  return inner(s, apply_x(s, to_longs(code.hx().row(j))));
}

std::map<long, double> measure_oz(const TruncatedState& s, const RotorCode& code, std::size_t j) {
  if (j >= code.hz().rows()) throw std::out_of_range("Z check index out of range");
  auto h = to_longs(code.hz().row(j));
  std::map<long, double> dist;
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    double p = std::norm(s.amp[idx]);
    if (p == 0) continue;
    auto c = s.charges(idx);
    long o = 0;
    for (std::size_t k = 0; k < s.n; ++k) o += h[k] * c[k];
    dist[o] += p;
  }
  return dist;
}

SparseHamiltonian build_code_hamiltonian(const RotorCode& code, long L, bool include_cos) {
  const std::size_t n = code.n();
  TruncatedState layout = zero_state(n, L);
  const std::size_t dim = layout.dim();
  auto hx = rows_of(code.hx());
  auto hz = rows_of(code.hz());

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(dim * (1 + 2 * hx.size()));
  std::vector<long> shifted(n);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    auto c = layout.charges(idx);
    double diag = 0;
    for (const auto& h : hz) {
      long o = 0;
      for (std::size_t k = 0; k < n; ++k) o += h[k] * c[k];
      diag += static_cast<double>(o) * static_cast<double>(o);
    }
    if (diag != 0) trip.emplace_back(idx, idx, diag);
    if (!include_cos) continue;
    // Each cos term contributes -1/2 between l and l + h; the transpose
    // entry comes from the partner basis state, keeping H symmetric.
    for (const auto& h : hx) {
      for (int sign : {1, -1}) {
        for (std::size_t k = 0; k < n; ++k) shifted[k] = c[k] + sign * h[k];
        if (layout.inside(shifted)) trip.emplace_back(layout.index(shifted), idx, -0.5);
      }
    }
  }
  SparseHamiltonian out;
  out.n = n;
  out.L = L;
  out.matrix.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.matrix.setFromTriplets(trip.begin(), trip.end());
  out.matrix.makeCompressed();
  return out;
}

}  // namespace rotor
