// Command-line front end. Exit codes: 0 success, 1 malformed or invalid code
// file, 2 CSS violation, 3 memory cap exceeded, 4 any other error (bad
// arguments, invalid parameters), 5 a reference-table row failed.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "rotor/circuits.hpp"
#include "rotor/code_io.hpp"
#include "rotor/constructions.hpp"
#include "rotor/distance.hpp"
#include "rotor/eigensolver.hpp"
#include "rotor/products.hpp"
#include "rotor/reference_table.hpp"
#include "rotor/simulator.hpp"

using namespace rotor;

namespace {

constexpr int kExitFormat = 1, kExitCss = 2, kExitCap = 3, kExitOther = 4, kExitMismatch = 5;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json small_vec_json(const SmallVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_si());
  return a;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string normalise_family(std::string f) {
  for (auto& c : f)
    if (c == '-') c = '_';
  if (f == "moebius_thin") return "thin_moebius";
  if (f == "rp3") return "rp3_punctured";
  return f;
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string family, out, flavor = "general";
  long w = 0, N = 0;
  std::vector<std::string> factors;
};

int run_construct(const ConstructArgs& a) {
  RotorCode code;
  const std::string fam = normalise_family(a.family);
  if (fam == "product") {
    if (a.factors.size() != 2) throw std::invalid_argument("product needs exactly two --factor options");
    ProductInput in{named_factor(a.factors[0]), named_factor(a.factors[1]), parse_flavor(a.flavor)};
    product_logicals(in);  // enforces the flavor's factor structure
    code = tensor_product(in, "product_" + a.factors[0] + "_" + a.factors[1]);
    code.meta["factors"] = a.factors[0] + "," + a.factors[1];
  } else {
    std::map<std::string, long> params;
    if (a.w) params["w"] = a.w;
    if (a.N) params["N"] = a.N;
    code = build_family(fam, params);
  }
  emit(canonical_code_text(code), a.out);
  return 0;
}

// analyze --------------------------------------------------------------------

int run_analyze(const std::string& path, const std::string& out) {
  RotorCode code = read_code_file(path);
  const Homology& h = code.homology;
  Json r;
  r["schema"] = kReportSchema;
  r["kind"] = "analyze";
  r["name"] = code.name;
  r["n"] = code.n();
  r["homology"] = {{"free_rank", tagged(h.free_rank, "exact")},
                   {"torsion", tagged(ints_json(h.torsion), "exact")},
                   {"group", describe_group(h.free_rank, h.torsion)}};
  r["parameters"] = parameter_string(code);
  r["logicals"] = {{"orders", ints_json(h.orders)}, {"lx", matrix_to_json(code.lx())}, {"lz", matrix_to_json(code.lz())}};
  Betti b = betti_real(code.complex);
  r["betti_real"] = {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}};
  Json modp = Json::object();
  for (long p : {2L, 3L, 5L}) modp[std::to_string(p)] = homology_mod_p(code.complex, p).h1;
  r["h1_mod_p"] = modp;
  r["surface"] = to_string(orientability_check(code.hx()));
  emit(dump(r), out);
  return 0;
}

// distance -------------------------------------------------------------------

struct DistanceArgs {
  std::string path, out;
  long dx_max = 8;
  std::vector<double> alphas;  // empty: default grid per logical
  int restarts = 8;
  unsigned jobs = 1;
  std::uint64_t seed = 12345;
  std::vector<std::size_t> logicals;
  bool all_logicals = false;
};

// Free logicals get pi, pi/2, pi/8 plus the alpha -> 0 limit; a torsion
// logical of order d gets the single phase 2 pi floor(d/2) / d.
std::vector<double> default_alphas(const Int& order) {
  if (sgn(order) == 0) return {std::numbers::pi, std::numbers::pi / 2, std::numbers::pi / 8, 0.0};
  const long d = order.get_si();
  return {2 * std::numbers::pi * static_cast<double>(d / 2) / static_cast<double>(d)};
}

void check_alpha(double alpha, const Int& order, std::size_t j) {
  if (sgn(order) == 0) {
    if (alpha < 0 || alpha > std::numbers::pi + 1e-12)
      throw std::invalid_argument("alpha must lie in [0, pi] for a free logical");
    return;
  }
  const double steps = alpha * order.get_d() / (2 * std::numbers::pi);
  if (std::abs(steps - std::round(steps)) > 1e-9 || std::abs(std::round(steps)) < 0.5)
    throw std::invalid_argument("alpha must be a nonzero multiple of 2 pi / " + order.get_str() + " for logical " +
                                std::to_string(j));
}

int run_distance(const DistanceArgs& a) {
  RotorCode code = read_code_file(a.path);
  Json r;
  r["schema"] = kReportSchema;
  r["kind"] = "distance";
  r["code"] = code.name;
  r["settings"] = {{"dx_max", a.dx_max}, {"restarts", a.restarts}, {"jobs", a.jobs}, {"seed", a.seed}};

  SearchOptions so;
  so.jobs = a.jobs;
  XDistance dx = x_distance_exact(code, a.dx_max, so);
  if (dx.d) {
    r["d_x"] = tagged(*dx.d, "exact");
    r["d_x_method"] = "exact";
    r["d_x_witness"] = small_vec_json(dx.witness);
  } else {
    r["d_x"] = tagged(">" + std::to_string(dx.searched_up_to), "bound");
    r["d_x_method"] = "bound";
    r["d_x_witness"] = nullptr;
  }
  r["parameters"] = parameter_string(code, dx.d ? std::to_string(*dx.d) : "?");

  Json qudit = Json::object();
  for (long l : {2L, 3L, 4L, 5L}) {
    auto q = qudit_x_distance(code, l, a.dx_max, so);
    qudit[std::to_string(l)] = q ? tagged(*q, "exact") : tagged(">" + std::to_string(a.dx_max), "bound");
  }
  r["qudit_bounds"] = qudit;
  if (dx.d) {
    QuditTransferBound tb = qudit_transfer_bound(code, dx.witness, {2, 3, 4, 5}, a.dx_max, so);
    r["d_x_lower_from_qudits"] = tagged(tb.bound, "bound");
  }

  std::vector<std::size_t> which = a.logicals;
  if (a.all_logicals || which.empty()) {
    which.clear();
    const std::size_t count = a.all_logicals ? code.num_logicals() : std::min<std::size_t>(1, code.num_logicals());
    for (std::size_t j = 0; j < count; ++j) which.push_back(j);
  }
  SpreadOptions sp;
  sp.restarts = a.restarts;
  sp.seed = a.seed;
  sp.jobs = a.jobs;
  Json dz = Json::array();
  for (std::size_t j : which) {
    if (j >= code.num_logicals()) throw std::invalid_argument("logical index out of range");
    const Int& order = code.homology.orders[j];
    const std::vector<double> alphas = a.alphas.empty() ? default_alphas(order) : a.alphas;
    for (double alpha : alphas) check_alpha(alpha, order, j);

    std::vector<Int> cls(code.num_logicals(), Int(0));
    cls[j] = 1;
    std::optional<DisjointRepSet> reps;
    std::string rep_note;
    RepSearchOptions ro;
    ro.jobs = a.jobs;
    ro.alpha = alphas.front();
    try {
      reps = find_disjoint_reps(code, cls, ro);
    } catch (const NoUnitRepresentative& ex) {
      rep_note = ex.what();
    }

    for (double alpha : alphas) {
      Json e = {{"logical", j}, {"order", order.get_si()}, {"alpha", alpha}};
      double upper = 0.0;
      if (alpha == 0.0) {
        upper = z_rotor_limit(code, j);
        e["upper"] = tagged(upper, "bound");
        e["witness"] = nullptr;
      } else {
        SpreadResult up = z_upper_spread(code, j, alpha, sp);
        upper = up.value;
        e["upper"] = tagged(upper, "bound");
        e["witness"] = up.phi;
      }
      if (reps) {
        const double lower = z_lower_bound(*reps, alpha);
        e["lower"] = tagged(lower, "bound");
        Json rj = Json::array();
        for (const auto& rep : reps->reps) rj.push_back(small_vec_json(rep));
        e["representatives"] = rj;
        if (reps->d_x_max() < 3) e["small_representatives"] = true;
        // Both sides bound the same class, so an inversion means a bug.
        if (lower > upper + 1e-9)
          throw std::logic_error("Z distance lower bound " + fmt(lower) + " exceeds upper bound " + fmt(upper));
      } else {
        e["lower"] = tagged(nullptr, "bound");
        e["lower_note"] = rep_note;
      }
      dz.push_back(e);
    }
  }
  r["delta_z"] = dz;
  emit(dump(r), a.out);
  return 0;
}

// simulate -------------------------------------------------------------------

struct SimArgs {
  std::string code_path, out;
  long L = 3, box = 2, sz = 0, phix_grid = 64, k = 3;
  std::vector<long> cls;
  double eps = 0.0, C = 100, Cg = 1, CJ = 0, EJ = 0.05;
  std::uint64_t seed = 1;
};

int run_codeword(const SimArgs& a) {
  RotorCode code = read_code_file(a.code_path);
  std::vector<long> cls = a.cls;
  cls.resize(code.num_logicals(), 0);
  TruncatedState s = codeword(code, cls, a.L, a.box);
  Json r;
  r["schema"] = kReportSchema;
  r["kind"] = "codeword";
  r["name"] = code.name;
  r["L"] = a.L;
  r["box_radius"] = a.box;
  r["class"] = cls;
  Json sx = Json::array();
  for (std::size_t j = 0; j < code.hx().rows(); ++j) {
    Complex v = expect_stabilizer_x(s, code, j);
    sx.push_back({{"check", j}, {"re", v.real()}, {"im", v.imag()}, {"method", "numeric"}});
  }
  r["stabilizer_x"] = sx;
  Json oz = Json::array();
  for (std::size_t j = 0; j < code.hz().rows(); ++j) {
    Json d = Json::object();
    for (auto [o, p] : measure_oz(s, code, j)) d[std::to_string(o)] = p;
    oz.push_back({{"check", j}, {"distribution", d}});
  }
  r["o_z"] = oz;
  emit(dump(r), a.out);
  return 0;
}

int run_spectrum(const SimArgs& a) {
  RotorCode code = read_code_file(a.code_path);
  SparseHamiltonian h = build_code_hamiltonian(code, a.L);
  Spectrum s = low_spectrum(h.matrix, static_cast<std::size_t>(a.k), a.seed);
  std::ostringstream os;
  os << "index,eigenvalue,residual\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) os << i << "," << fmt(s.values[i]) << "," << fmt(s.residuals[i]) << "\n";
  emit(os.str(), a.out);
  return s.validated() ? 0 : kExitOther;
}

int run_bacon_shor(const SimArgs& a) {
  if (a.phix_grid < 2) throw std::invalid_argument("phix-grid must be at least 2");
  std::ostringstream os;
  os << "s_z,phi_x";
  for (long i = 0; i < a.k; ++i) os << ",E" << i;
  os << "\n";
  const long L = std::max<long>(a.L, 16);
  for (long g = 0; g < a.phix_grid; ++g) {
    const double phi = 2 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(a.phix_grid - 1);
    auto e = bacon_shor_band(a.sz, phi, a.eps, L, static_cast<std::size_t>(a.k));
    os << a.sz << "," << fmt(phi);
    for (double x : e) os << "," << fmt(x);
    os << "\n";
  }
  emit(os.str(), a.out);
  return 0;
}

int run_four_phase(const SimArgs& a) {
  FourPhaseParams p;
  p.C = a.C;
  p.Cg = a.Cg;
  p.CJ = a.CJ;
  p.EJ = a.EJ;
  p.L = a.L;
  FourPhaseReport rep = effective_comparison(p);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  Json r;
  r["schema"] = kReportSchema;
  r["kind"] = "four-phase";
  r["parameters"] = {{"C", p.C}, {"Cg", p.Cg}, {"CJ", p.CJ}, {"EJ", p.EJ}, {"L", p.L}};
  r["agiton_diff_energy"] = tagged(rep.e_diff, "exact");
  r["ej_eff_formula"] = tagged(rep.ej_eff_formula, "exact");
  r["doublet_splitting"] = tagged(rep.splitting, "numeric");
  r["pair_hop"] = tagged(rep.hop, "numeric");
  r["ej_eff_extracted"] = tagged(rep.ej_eff_extracted, "numeric");
  r["relative_error"] = rep.relative_error;
  r["matrix_element"] = tagged(rep.matrix_element, "exact");
  r["zero_agiton_weight"] = tagged(rep.zero_agiton_weight, "numeric");
  r["warnings"] = rep.warnings;
  emit(dump(r), a.out);
  return 0;
}

// reference-table ------------------------------------------------------------

int run_reference_table(const std::string& out, const std::string& format) {
  auto rows = reference_table();
  bool all = true;
  std::ostringstream os;
  if (format == "csv") {
    os << "instance,declared,computed,result,note\n";
    for (const auto& r : rows)
      os << r.label << ",\"" << r.declared << "\",\"" << r.computed << "\"," << (r.pass ? "PASS" : "FAIL") << ",\""
         << r.note << "\"\n";
  } else {
    for (const auto& r : rows)
      os << r.label << ": declared " << r.declared << ", computed " << r.computed << ", " << (r.pass ? "PASS" : "FAIL")
         << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  }
  for (const auto& r : rows) all = all && r.pass;
  emit(os.str(), out);
  return all ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotor code construction, analysis, distances and simulation"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code family and write it as JSON");
  construct->add_option("family", ca.family, "Family name (" + [] {
    std::string s;
    for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
    return s + ", product)";
  }())->required();
  construct->add_option("--w", ca.w, "Width parameter");
  construct->add_option("--N", ca.N, "Length parameter");
  construct->add_option("--flavor", ca.flavor, "Product flavor: general, free-free, torsion-free, torsion-torsion");
  construct->add_option("--factor", ca.factors, "Product factor (hamming743, hamming743T, hamming743sq, repetition:N, twisted-repetition:N)");
  construct->add_option("-o,--out", ca.out, "Output path (stdout if omitted)");

  std::string analyze_path, analyze_out;
  auto* analyze = app.add_subcommand("analyze", "Homology, logicals and parameter string");
  analyze->add_option("code", analyze_path, "Code JSON file")->required();
  analyze->add_option("-o,--out", analyze_out, "Output path");

  DistanceArgs da;
  auto* distance = app.add_subcommand("distance", "X distance and Z distance bounds");
  distance->add_option("code", da.path, "Code JSON file")->required();
  distance->add_option("--dx-max", da.dx_max, "Largest X weight searched");
  distance->add_option("--alpha", da.alphas, "Logical Z phase (repeatable; default grid)");
  distance->add_option("--restarts", da.restarts, "Random restarts of the spreading optimiser");
  distance->add_option("--jobs", da.jobs, "Worker threads");
  distance->add_option("--seed", da.seed, "Random seed");
  distance->add_option("--logical", da.logicals, "Logical generator index (repeatable; default 0)");
  distance->add_flag("--all-logicals", da.all_logicals, "Bound every logical generator");
  distance->add_option("-o,--out", da.out, "Output path");

  SimArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Truncated rotor simulations");
  simulate->require_subcommand(1);
  auto* cw = simulate->add_subcommand("codeword", "Stabilizer expectations of a codeword");
  cw->add_option("--code", sa.code_path, "Code JSON file")->required();
  cw->add_option("--L", sa.L, "Charge cutoff");
  cw->add_option("--box", sa.box, "Coset box radius");
  cw->add_option("--class", sa.cls, "Logical class coordinates");
  cw->add_option("-o,--out", sa.out, "Output path");
  auto* spectrum_cmd = simulate->add_subcommand("spectrum", "Low spectrum of the code Hamiltonian (CSV)");
  spectrum_cmd->add_option("--code", sa.code_path, "Code JSON file")->required();
  spectrum_cmd->add_option("--L", sa.L, "Charge cutoff");
  spectrum_cmd->add_option("--k", sa.k, "Number of levels");
  spectrum_cmd->add_option("--seed", sa.seed, "Seed for the iterative solver");
  spectrum_cmd->add_option("-o,--out", sa.out, "Output path");
  auto* bs = simulate->add_subcommand("bacon-shor", "Four-rotor Bacon-Shor bands versus phi_x (CSV)");
  bs->add_option("--sz", sa.sz, "Z syndrome s_z");
  bs->add_option("--eps", sa.eps, "Josephson capacitance ratio 4 C_J / C_g");
  bs->add_option("--phix-grid", sa.phix_grid, "Grid points on [0, 2 pi]");
  bs->add_option("--L", sa.L, "Charge cutoff (at least 16 is used)");
  bs->add_option("--k", sa.k, "Number of bands");
  bs->add_option("-o,--out", sa.out, "Output path");
  auto* fp = simulate->add_subcommand("four-phase", "Four-phase gadget effective coupling");
  fp->add_option("--C", sa.C, "Rung capacitance");
  fp->add_option("--Cg", sa.Cg, "Ground capacitance");
  fp->add_option("--CJ", sa.CJ, "Junction capacitance");
  fp->add_option("--EJ", sa.EJ, "Josephson energy (units of e^2 / capacitance)");
  fp->add_option("--L", sa.L, "Node charge cutoff");
  fp->add_option("-o,--out", sa.out, "Output path");

  std::string table_out, table_format = "text";
  auto* table = app.add_subcommand("reference-table", "Declared versus computed parameters for every instance");
  table->add_option("--format", table_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  table->add_option("-o,--out", table_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitOther;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*analyze) return run_analyze(analyze_path, analyze_out);
    if (*distance) return run_distance(da);
    if (*cw) return run_codeword(sa);
    if (*spectrum_cmd) return run_spectrum(sa);
    if (*bs) return run_bacon_shor(sa);
    if (*fp) return run_four_phase(sa);
    if (*table) return run_reference_table(table_out, table_format);
  } catch (const CodeFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const CssViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCss;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
