#include "rotor/distance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace rotor {

namespace {

constexpr double kPi = std::numbers::pi;

using Dense64 = std::vector<SmallVec>;

Dense64 to_dense(const IntMatrix& m) {
  Dense64 out(m.rows(), SmallVec(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw std::overflow_error("matrix entry too large");
      out[i][j] = m(i, j).get_si();
    }
  return out;
}

std::int64_t dot64(const SmallVec& a, const SmallVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Class coordinates v . lz_j, torsion entries reduced mod d_j.
struct ClassProbe {
  Dense64 lz;
  SmallVec orders;
  explicit ClassProbe(const RotorCode& code) : lz(to_dense(code.lz())) {
    for (const Int& d : code.homology.orders) orders.push_back(d.get_si());
  }
  SmallVec coords(const SmallVec& v) const {
    SmallVec c(lz.size());
    for (std::size_t j = 0; j < lz.size(); ++j) {
      c[j] = dot64(v, lz[j]);
      if (orders[j] > 0) c[j] = pos_mod(c[j], orders[j]);
    }
    return c;
  }
  bool nontrivial(const SmallVec& v) const {
    for (std::size_t j = 0; j < lz.size(); ++j) {
      std::int64_t c = dot64(v, lz[j]);
      if (orders[j] > 0 ? pos_mod(c, orders[j]) != 0 : c != 0) return true;
    }
    return false;
  }
};

IntVector to_int(const SmallVec& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

// Membership in rowspace(H_X) + l Z^n, with a fast path for prime l.
class ModLattice {
 public:
  ModLattice(const IntMatrix& hx, long l) : l_(l), n_(hx.cols()) {
    prime_ = l >= 2;
    for (long q = 2; q * q <= l; ++q)
      if (l % q == 0) prime_ = false;
    if (prime_) {
      Dense64 rows = to_dense(hx);
      for (auto& r : rows)
        for (auto& x : r) x = pos_mod(x, l_);
      // row echelon form over F_l
      std::size_t rank = 0;
      for (std::size_t c = 0; c < n_ && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        std::int64_t inv = inverse(rows[rank][c]);
        for (auto& x : rows[rank]) x = pos_mod(x * inv, l_);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i == rank || rows[i][c] == 0) continue;
          std::int64_t f = rows[i][c];
          for (std::size_t j = 0; j < n_; ++j) rows[i][j] = pos_mod(rows[i][j] - f * rows[rank][j], l_);
        }
        pivots_.push_back(c);
        basis_.push_back(rows[rank]);
        ++rank;
      }
    } else {
      solver_.emplace(vstack(hx, scale(IntMatrix::identity(n_), Int(l))));
    }
  }

  bool contains(const SmallVec& v) const {
    if (!prime_) return solver_->contains(to_int(v));
    SmallVec r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r[j] = pos_mod(v[j], l_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::int64_t f = r[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r[j] = pos_mod(r[j] - f * basis_[k][j], l_);
    }
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
  }

 private:
  std::int64_t inverse(std::int64_t a) const {
    for (std::int64_t x = 1; x < l_; ++x)
      if (pos_mod(a * x, l_) == 1) return x;
    throw std::logic_error("no inverse");
  }
  long l_;
  std::size_t n_;
  bool prime_ = false;
  Dense64 basis_;
  std::vector<std::size_t> pivots_;
  std::optional<LatticeSolver> solver_;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double wrap_pi(double x) {
  double y = std::fmod(x + kPi, 2 * kPi);
  if (y < 0) y += 2 * kPi;
  return y - kPi;
}

}  // namespace

double WeightModel::beta_x() const { return -std::log(p_jump); }

void WeightModel::validate() const {
  if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
  if (!(p_jump > 0 && p_jump < 1)) throw std::invalid_argument("p_jump must lie in (0, 1)");
}

long weight_x(const IntVector& v) {
  Int s = 0;
  for (const auto& x : v) s += abs(x);
  return s.get_si();
}

long weight_x(const SmallVec& v) {
  long s = 0;
  for (auto x : v) s += x < 0 ? -x : x;
  return s;
}

double weight_z(const std::vector<double>& phi) {
  double s = 0;
  for (double p : phi) {
    double h = std::sin(p / 2);
    s += h * h;
  }
  return s;
}

XDistance x_distance_exact(const RotorCode& code, long max_weight, const SearchOptions& opt) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
  XDistance out;
  if (code.num_logicals() == 0) {
    out.searched_up_to = max_weight;
    return out;
  }
  ClassProbe probe(code);
  SearchProblem p;
  p.checks = code.hz().rows() ? code.hz() : IntMatrix(0, code.n());
  p.mode = SearchMode::Integer;
  p.accept = [&probe](const SmallVec& v) { return probe.nontrivial(v); };
  p.jobs = opt.jobs;
  p.max_nodes = opt.max_nodes;
  MinimumResult m = search_minimum(p, max_weight);
  out.d = m.weight;
  out.witness = m.witness;
  out.exhausted = m.exhausted;
  out.searched_up_to = m.weight ? *m.weight : max_weight;
  return out;
}

std::optional<long> qudit_x_distance(const RotorCode& code, long l, long max_weight, const SearchOptions& opt) {
  if (l < 2) throw std::invalid_argument("qudit dimension must be at least 2");
  ModLattice lattice(code.hx().rows() ? code.hx() : IntMatrix(0, code.n()), l);
  SearchProblem p;
  p.checks = code.hz().rows() ? code.hz() : IntMatrix(0, code.n());
  p.mode = SearchMode::ModL;
  p.modulus = l;
  p.accept = [&lattice](const SmallVec& v) { return !lattice.contains(v); };
  p.jobs = opt.jobs;
  p.max_nodes = opt.max_nodes;
  return search_minimum(p, max_weight).weight;
}

QuditTransferBound qudit_transfer_bound(const RotorCode& code, const SmallVec& witness, const std::vector<long>& dims,
                             long max_weight, const SearchOptions& opt) {
  QuditTransferBound b;
  for (long l : dims) {
    if (!nontrivial_mod(code, to_int(witness), l)) {
      b.per_l.push_back({l, std::nullopt});
      continue;
    }
    b.admissible.push_back(l);
    auto d = qudit_x_distance(code, l, max_weight, opt);
    b.per_l.push_back({l, d});
    if (d) b.bound = std::max(b.bound, *d);
  }
  return b;
}

long DisjointRepSet::d_x_max() const {
  long m = 0;
  for (const auto& r : reps) m = std::max(m, weight_x(r));
  return m;
}

std::vector<long> DisjointRepSet::weights() const {
  std::vector<long> w;
  for (const auto& r : reps) w.push_back(weight_x(r));
  return w;
}

namespace {

double rep_value(long weight, double alpha) {
  if (alpha == 0.0) return 1.0 / static_cast<double>(weight);
  double s = std::sin(alpha / (2.0 * weight)), t = std::sin(alpha / 2.0);
  return weight * s * s / (t * t);
}

struct Packer {
  std::vector<std::vector<std::size_t>> supports;
  std::vector<long> weights;
  std::vector<double> values;
  std::size_t n = 0;
  std::uint64_t nodes = 0, max_nodes = 0;
  std::vector<bool> used;
  std::vector<std::size_t> current, best;
  double current_value = 0, best_value = -1;
  std::size_t free_count = 0;

  bool fits(std::size_t c) const {
    for (std::size_t j : supports[c])
      if (used[j]) return false;
    return true;
  }
  void take(std::size_t c, bool on) {
    for (std::size_t j : supports[c]) used[j] = on;
    if (on) {
      free_count -= supports[c].size();
      current.push_back(c);
      current_value += values[c];
    } else {
      free_count += supports[c].size();
      current.pop_back();
      current_value -= values[c];
    }
  }
  void search(std::size_t from) {
    if (max_nodes && ++nodes > max_nodes) return;
    if (current_value > best_value + 1e-15) {
      best_value = current_value;
      best = current;
    }
    // value per rotor is largest for the lightest remaining candidate
    if (from >= supports.size()) return;
    double bound = current_value + static_cast<double>(free_count) * values[from] / static_cast<double>(weights[from]);
    if (bound <= best_value + 1e-15) return;
    for (std::size_t c = from; c < supports.size(); ++c) {
      if (!fits(c)) continue;
      take(c, true);
      search(c + 1);
      take(c, false);
      if (max_nodes && nodes > max_nodes) return;
    }
  }
};

}  // namespace

DisjointRepSet find_disjoint_reps(const RotorCode& code, const std::vector<Int>& class_coords,
                                  const RepSearchOptions& opt) {
  if (class_coords.size() != code.num_logicals()) throw std::invalid_argument("class coordinate length mismatch");
  ClassProbe probe(code);
  SmallVec target;
  bool nonzero = false;
  for (std::size_t j = 0; j < class_coords.size(); ++j) {
    std::int64_t t = class_coords[j].get_si();
    if (probe.orders[j] > 0) t = pos_mod(t, probe.orders[j]);
    nonzero |= t != 0;
    target.push_back(t);
  }
  if (!nonzero) throw std::invalid_argument("target class is trivial");

  SearchProblem p;
  p.checks = code.hz().rows() ? code.hz() : IntMatrix(0, code.n());
  p.mode = SearchMode::Ternary;
  p.symmetric_accept = false;
  p.accept = [&](const SmallVec& v) { return probe.coords(v) == target; };
  p.max_nodes = opt.max_nodes;

  std::vector<SmallVec> candidates;
  long first = 0;
  long max_w = opt.max_rep_weight;
  for (long w = 1; w <= (max_w ? max_w : static_cast<long>(code.n())); ++w) {
    enumerate_shell(p, w, [&](const SmallVec& v) {
      candidates.push_back(v);
      return candidates.size() < opt.max_candidates;
    });
    if (!candidates.empty() && first == 0) {
      first = w;
      if (!max_w) max_w = w + 2;
    }
    if (candidates.size() >= opt.max_candidates) break;
  }
  if (candidates.empty()) throw NoUnitRepresentative("no {-1,0,1} representative of the class within budget");

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SmallVec& a, const SmallVec& b) { return weight_x(a) < weight_x(b); });
  Packer pk;
  pk.n = code.n();
  pk.used.assign(pk.n, false);
  pk.free_count = pk.n;
  pk.max_nodes = opt.max_nodes;
  for (const auto& c : candidates) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) s.push_back(j);
    pk.supports.push_back(s);
    pk.weights.push_back(static_cast<long>(s.size()));
    pk.values.push_back(rep_value(static_cast<long>(s.size()), opt.alpha));
  }
  pk.search(0);

  DisjointRepSet out;
  for (std::size_t c : pk.best) out.reps.push_back(candidates[c]);
  for (auto t : target) out.class_coords.emplace_back(static_cast<long>(t));
  return out;
}

bool valid_disjoint_reps(const RotorCode& code, const DisjointRepSet& s, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (s.reps.empty()) return fail("empty set");
  ClassProbe probe(code);
  std::vector<bool> used(code.n(), false);
  SmallVec first_class;
  for (std::size_t r = 0; r < s.reps.size(); ++r) {
    const auto& v = s.reps[r];
    if (v.size() != code.n()) return fail("length mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < -1 || v[j] > 1) return fail("entry outside {-1,0,1}");
      if (v[j] != 0) {
        if (used[j]) return fail("supports overlap at rotor " + std::to_string(j));
        used[j] = true;
      }
    }
    if (!is_zero(x_syndrome(code, to_int(v)))) return fail("representative has nonzero syndrome");
    if (!probe.nontrivial(v)) return fail("representative is a stabilizer");
    SmallVec c = probe.coords(v);
    if (r == 0) first_class = c;
    else if (c != first_class) return fail("representatives lie in different classes");
  }
  return true;
}

double z_lower_bound(const std::vector<long>& rep_weights, double alpha) {
  if (rep_weights.empty()) throw std::invalid_argument("empty representative set");
  if (alpha < 0 || alpha > kPi) throw std::invalid_argument("alpha must lie in [0, pi]");
  double s = 0;
  for (long w : rep_weights) s += rep_value(w, alpha);
  return s;
}

double z_lower_bound(const DisjointRepSet& s, double alpha) { return z_lower_bound(s.weights(), alpha); }

double spread_min_closed_form(long n, double alpha) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  double s = std::sin(alpha / (2.0 * n));
  return n * s * s;
}

namespace {

// W_Z(phi0 + nu H_Z) / sin^2(alpha/2) and its gradient in nu.
double spread_eval(const Dense64& hz, const std::vector<double>& phi0, double norm, const std::vector<double>& nu,
                   std::vector<double>* grad, std::vector<double>* phi_out) {
  const std::size_t n = phi0.size();
  std::vector<double> phi = phi0;
  for (std::size_t i = 0; i < hz.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (hz[i][j]) phi[j] += nu[i] * static_cast<double>(hz[i][j]);
  double w = 0;
  for (double p : phi) {
    double h = std::sin(p / 2);
    w += h * h;
  }
  if (grad) {
    grad->assign(hz.size(), 0.0);
    for (std::size_t i = 0; i < hz.size(); ++i) {
      double g = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (hz[i][j]) g += 0.5 * std::sin(phi[j]) * static_cast<double>(hz[i][j]);
      (*grad)[i] = g / norm;
    }
  }
  if (phi_out) *phi_out = phi;
  return w / norm;
}

SpreadResult descend(const Dense64& hz, const std::vector<double>& phi0, double norm, std::vector<double> nu,
                     const SpreadOptions& opt) {
  SpreadResult r;
  std::vector<double> g, trial(nu.size());
  double f = spread_eval(hz, phi0, norm, nu, &g, nullptr);
  double step = opt.step;
  for (int it = 0; it < opt.max_iters; ++it) {
    r.iterations = it + 1;
    double gg = 0;
    for (double x : g) gg += x * x;
    if (gg < 1e-24) {
      r.converged = true;
      break;
    }
    // backtracking line search with the Armijo condition
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < nu.size(); ++i) trial[i] = wrap_pi(nu[i] - step * g[i]);
      double ft = spread_eval(hz, phi0, norm, trial, nullptr, nullptr);
      if (ft <= f - 1e-4 * step * gg) {
        moved = true;
        double prev = f;
        nu = trial;
        f = spread_eval(hz, phi0, norm, nu, &g, nullptr);
        step *= 2.0;
        if (prev - f < opt.tol * std::max(1.0, std::abs(f))) r.converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved || r.converged) {
      r.converged = true;
      break;
    }
  }
  r.value = spread_eval(hz, phi0, norm, nu, nullptr, &r.phi);
  for (auto& p : r.phi) p = wrap_pi(p);
  r.nu = nu;
  return r;
}

}  // namespace

double spread_objective(const RotorCode& code, std::size_t logical, double alpha, const std::vector<double>& nu,
                        std::vector<double>* grad) {
  Dense64 hz = to_dense(code.hz());
  Dense64 lz = to_dense(code.lz());
  std::vector<double> phi0(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) phi0[j] = alpha * static_cast<double>(lz.at(logical)[j]);
  double t = std::sin(alpha / 2);
  return spread_eval(hz, phi0, t * t, nu, grad, nullptr);
}

SpreadResult z_upper_spread_from(const IntMatrix& hz_m, const std::vector<double>& phi0, double alpha,
                                 const SpreadOptions& opt) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  Dense64 hz = to_dense(hz_m);
  const double t = std::sin(alpha / 2), norm = t * t;
  const std::size_t rz = hz.size();
  const int starts = 1 + std::max(0, opt.restarts);
  std::vector<SpreadResult> results(static_cast<std::size_t>(starts));
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= starts) return;
      std::vector<double> nu(rz, 0.0);
      if (k > 0) {
        std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ULL);
        for (auto& x : nu) x = (2 * uniform01(rng) - 1) * kPi;
      }
      results[static_cast<std::size_t>(k)] = descend(hz, phi0, norm, nu, opt);
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(starts)));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (results[k].value < results[best].value - 1e-12) best = k;
  return results[best];
}

std::optional<SmallVec> compact_z_representative(const RotorCode& code, std::size_t logical, long max_weight,
                                                 const SearchOptions& opt) {
  if (logical >= code.num_logicals()) throw std::invalid_argument("logical index out of range");
  Dense64 lx = to_dense(code.lx());
  const std::int64_t d = code.homology.orders[logical].get_si();
  SearchProblem p;
  p.checks = code.hx().rows() ? code.hx() : IntMatrix(0, code.n());
  p.jobs = opt.jobs;
  p.max_nodes = opt.max_nodes;
  if (d == 0) {
    p.mode = SearchMode::Integer;
    p.accept = [&](const SmallVec& z) {
      for (std::size_t i = 0; i < lx.size(); ++i) {
        std::int64_t c = dot64(z, lx[i]);
        if (i == logical ? (c != 1 && c != -1) : c != 0) return false;
      }
      return true;
    };
  } else {
    p.mode = SearchMode::ModL;
    p.modulus = d;
    p.accept = [&](const SmallVec& z) {
      for (std::size_t i = 0; i < lx.size(); ++i)
        if (pos_mod(dot64(z, lx[i]), d) != (i == logical ? 1 : 0)) return false;
      return true;
    };
  }
  MinimumResult m = search_minimum(p, max_weight);
  if (!m.weight) return std::nullopt;
  SmallVec z = m.witness;
  if (d == 0 && dot64(z, lx[logical]) < 0)
    for (auto& x : z) x = -x;
  return z;
}

std::optional<SmallVec> lightest_z_logical(const RotorCode& code, const IntVector& x, long max_weight,
                                           const SearchOptions& opt) {
  if (x.size() != code.n()) throw std::invalid_argument("vector length differs from n");
  SmallVec xs;
  for (const auto& v : x) {
    if (!v.fits_slong_p()) throw std::overflow_error("vector entry too large");
    xs.push_back(v.get_si());
  }
  SearchProblem p;
  p.checks = code.hx().rows() ? code.hx() : IntMatrix(0, code.n());
  p.mode = SearchMode::Integer;
  p.jobs = opt.jobs;
  p.max_nodes = opt.max_nodes;
  p.accept = [&](const SmallVec& z) {
    const std::int64_t c = dot64(z, xs);
    return c == 1 || c == -1;
  };
  MinimumResult m = search_minimum(p, max_weight);
  if (!m.weight) return std::nullopt;
  SmallVec z = m.witness;
  if (dot64(z, xs) < 0)
    for (auto& v : z) v = -v;
  return z;
}

SpreadResult z_upper_spread(const RotorCode& code, std::size_t logical, double alpha, const SpreadOptions& opt) {
  if (logical >= code.num_logicals()) throw std::invalid_argument("logical index out of range");
  const IntMatrix hz = code.hz().rows() ? code.hz() : IntMatrix(0, code.n());
  std::vector<double> phi0(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) phi0[j] = alpha * code.lz()(logical, j).get_d();
  SpreadResult best = z_upper_spread_from(hz, phi0, alpha, opt);
  // A light representative of the same class is a second deterministic start.
  SearchOptions sopt;
  sopt.max_nodes = 5000000;
  if (auto z = compact_z_representative(code, logical, std::min<long>(static_cast<long>(code.n()), 12), sopt)) {
    for (std::size_t j = 0; j < code.n(); ++j) phi0[j] = alpha * static_cast<double>((*z)[j]);
    SpreadOptions single = opt;
    single.restarts = 0;
    SpreadResult r = z_upper_spread_from(hz, phi0, alpha, single);
    if (r.value < best.value - 1e-12) best = r;
  }
  return best;
}

double z_rotor_limit(const RotorCode& code, std::size_t logical) {
  const std::size_t n = code.n(), rz = code.hz().rows();
  Eigen::VectorXd l(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) l(static_cast<Eigen::Index>(j)) = code.lz()(logical, j).get_d();
  if (rz == 0) return l.squaredNorm();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rz));
  for (std::size_t i = 0; i < rz; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = code.hz()(i, j).get_d();
  Eigen::VectorXd mu = a.completeOrthogonalDecomposition().solve(-l);
  return (l + a * mu).squaredNorm();
}

double spread_min_numeric(long n, double alpha, int max_k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> patterns;
  patterns.push_back(std::vector<double>(N, 1.0));
  {
    std::vector<double> alt(N);
    for (std::size_t j = 0; j < N; ++j) alt[j] = j % 2 ? -1.0 : 1.0;
    patterns.push_back(alt);
    std::vector<double> half(N, 1.0);
    for (std::size_t j = 0; j < N / 2; ++j) half[j] = -1.0;
    patterns.push_back(half);
  }
  std::mt19937_64 rng(2024);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : patterns)
    for (int k = -max_k; k <= max_k; ++k) {
      const double c = alpha + 2 * kPi * k;
      auto project = [&](std::vector<double>& phi) {
        double s = 0;
        for (std::size_t j = 0; j < N; ++j) s += m[j] * phi[j];
        double shift = (c - s) / static_cast<double>(N);
        for (std::size_t j = 0; j < N; ++j) phi[j] += shift * m[j];
      };
      for (int start = 0; start < 12; ++start) {
        std::vector<double> phi(N);
        for (auto& x : phi) x = (2 * uniform01(rng) - 1) * kPi;
        project(phi);
        double step = 0.5;
        double f = weight_z(phi);
        for (int it = 0; it < 20000; ++it) {
          std::vector<double> g(N);
          double gm = 0;
          for (std::size_t j = 0; j < N; ++j) {
            g[j] = 0.5 * std::sin(phi[j]);
            gm += g[j] * m[j];
          }
          gm /= static_cast<double>(N);
          double gg = 0;
          for (std::size_t j = 0; j < N; ++j) {
            g[j] -= gm * m[j];
            gg += g[j] * g[j];
          }
          if (gg < 1e-26) break;
          bool moved = false;
          for (int bt = 0; bt < 60; ++bt) {
            std::vector<double> t(N);
            for (std::size_t j = 0; j < N; ++j) t[j] = phi[j] - step * g[j];
            double ft = weight_z(t);
            if (ft <= f - 1e-4 * step * gg) {
              phi = t;
              f = ft;
              step *= 2;
              moved = true;
              break;
            }
            step *= 0.5;
          }
          if (!moved) break;
        }
        best = std::min(best, f);
      }
    }
  return best;
}

}  // namespace rotor
