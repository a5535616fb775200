// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinorbit/cli.hpp"
#include "spinorbit/curve_io.hpp"
#include "spinorbit/ion_catalog.hpp"
#include "spinorbit/oracle.hpp"
#include "spinorbit/thermal.hpp"
#include "spinorbit/verify.hpp"

using namespace spinorbit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    passed = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<const IonRecord*> coupled_ions() {
  std::vector<const IonRecord*> out;
  for (const auto& rec : default_catalog())
    if (rec.zeta) out.push_back(&rec);
  return out;
}

double as_real(HalfInt h) { return static_cast<double>(h.twice()) / 2.0; }

// 1 ------------------------------------------------------------------------
Outcome table_te() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<const char*, double> expected[] = {{"Ce", 1758}, {"Pr", 1851}, {"Nd", 1904},
                                                     {"Pm", 2008}, {"Sm", 1975}, {"Eu", 3295}};
  double worst = 0.0;
  for (const auto& [symbol, te] : expected) {
    const auto r = entanglement_temperature(ion_record(symbol).system(Weighting::LevelUniform));
    if (!r.found()) {
      o.fail(std::string(symbol) + " has no crossing");
      continue;
    }
    const double dev = std::abs(*r.kelvin - te);
    worst = std::max(worst, dev);
    if (dev > 1.0) o.fail(std::string(symbol) + " T_E = " + fmt("%.3f", *r.kelvin));
  }
  const auto ce = entanglement_temperature(ion_record("Ce").system(Weighting::LevelUniform));
  const double anchor = 3150.0 / std::log(6.0);
  if (!ce.found() || std::abs(*ce.kelvin - anchor) > kDefaultRootTolerance)
    o.fail("Ce differs from 3150/ln 6");
  const double elapsed = seconds_since(t0);
  if (elapsed >= 1.0) o.fail("runtime " + fmt("%.3f s", elapsed));
  o.note("max |dT| = " + fmt("%.3f K", worst) + ", Ce - 3150/ln6 = " +
         fmt("%.2e K", ce.found() ? *ce.kelvin - anchor : NAN) + ", " + fmt("%.4f s", elapsed));
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome heavy_null() {
  Outcome o;
  const auto grid = log_grid(1.0, 1e5, 400);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto* rec : coupled_ions()) {
    if (rec->light()) continue;
    for (const Weighting w : {Weighting::LevelUniform, Weighting::MultipletDegenerate}) {
      const auto sys = rec->system(w);
      const auto r = entanglement_temperature(sys);
      if (r.found()) o.fail(rec->symbol + " crosses under " + to_string(w));
      for (const double t : grid) {
        const double ratio = witness(sys, t) / std::abs(*rec->zeta);
        min_ratio = std::min(min_ratio, ratio);
        if (ratio < -1e-9) o.fail(rec->symbol + " W < 0 at " + fmt("%.1f K", t));
      }
    }
  }
  o.note("min W/|zeta| = " + fmt("%.3e", min_ratio) + " on 400 log-spaced T in [1, 1e5] K");
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome hund() {
  Outcome o;
  // (2s, 2l, 2j0) as tabulated, Ce .. Yb
  const int table[13][3] = {{1, 6, 5},  {2, 10, 8},  {3, 12, 9},  {4, 12, 8},  {5, 10, 5},
                            {6, 6, 0},  {7, 0, 7},   {6, 6, 12},  {5, 10, 15}, {4, 12, 16},
                            {3, 12, 15}, {2, 10, 12}, {1, 6, 7}};
  for (int n = 1; n <= 13; ++n) {
    const auto t = hund_rules(n);
    const auto* ref = table[n - 1];
    if (t.s.twice() != ref[0] || t.l.twice() != ref[1] || t.j0.twice() != ref[2])
      o.fail(lanthanide_symbols()[static_cast<std::size_t>(n - 1)] + " mismatch");
  }
  o.note("13 ions compared exactly");
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome gap_consistency() {
  Outcome o;
  for (const auto* rec : coupled_ions()) {
    const double j0 = as_real(rec->j0);
    const double dev = rec->light() ? std::abs(*rec->delta_e - *rec->zeta * (j0 + 1.0))
                                    : std::abs(*rec->delta_e + *rec->zeta * j0);
    const double tol = rec->light() ? 1.0 : 2.0;
    if (dev > tol)
      o.fail(rec->symbol + " |residual| = " + fmt("%.1f K", dev) + " > " + fmt("%.0f K", tol));
  }
  if (o.passed) o.note("all 12 ions within tolerance");
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome oracle_spectrum() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  double worst_residual = 0.0;
  int max_sweeps = 0;
  std::size_t max_dim = 0;
  for (const auto* rec : coupled_ions()) {
    const auto sys = rec->system(Weighting::MultipletDegenerate);
    const auto h = build_hamiltonian(sys);
    max_dim = std::max(max_dim, h.dim());
    const auto eig = hermitian_eigen(h);
    std::vector<double> want;
    double scale = 1.0;
    for (const auto& m : multiplets(sys)) {
      want.insert(want.end(), static_cast<std::size_t>(m.degeneracy), m.energy);
      scale = std::max(scale, std::abs(m.energy));
    }
    std::sort(want.begin(), want.end());
    if (want.size() != eig.values.size()) {
      o.fail(rec->symbol + " dimension mismatch");
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      worst = std::max(worst, std::abs(eig.values[i] - want[i]) / scale);
    worst_residual = std::max(worst_residual, eig.off_norm / eig.norm);
    max_sweeps = std::max(max_sweeps, eig.sweeps);
  }
  const double elapsed = seconds_since(t0);
  if (worst > 1e-9) o.fail("spectrum deviation " + fmt("%.2e", worst));
  if (worst_residual >= 1e-13) o.fail("Jacobi residual " + fmt("%.2e", worst_residual));
  if (max_sweeps > 50) o.fail("sweeps " + std::to_string(max_sweeps));
  if (elapsed >= 2.0) o.fail("runtime " + fmt("%.3f s", elapsed));
  o.note("rel dev " + fmt("%.2e", worst) + ", residual/||H|| " + fmt("%.2e", worst_residual) +
         ", sweeps <= " + std::to_string(max_sweeps) + ", max dim " + std::to_string(max_dim) +
         ", " + fmt("%.4f s", elapsed));
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome oracle_trace() {
  Outcome o;
  double worst = 0.0;
  const auto grid = log_grid(1.0, 1e5, 50);
  for (const auto* rec : coupled_ions()) {
    const auto sys = rec->system(Weighting::MultipletDegenerate);
    const auto spectrum = eigen_spectrum(build_hamiltonian(sys));
    for (const double t : grid) {
      const double closed = mean_energy(sys, t);
      worst = std::max(worst, std::abs(thermal_mean_energy_dense(spectrum, t) - closed) /
                                  std::abs(closed));
    }
  }
  if (worst > 1e-10) o.fail("relative deviation " + fmt("%.2e", worst));
  o.note("max rel dev " + fmt("%.2e", worst) + " on 50 log-spaced T in [1, 1e5] K x 12 ions");
  return o;
}

// 7 and 8 share the same samples -------------------------------------------
struct SamplingStats {
  double min_margin = std::numeric_limits<double>::infinity();
  double worst_identity = 0.0;
  double worst_saturation = 0.0;
  long samples = 0;
};

SamplingStats sample_all() {
  SamplingStats st;
  std::mt19937_64 rng(1);
  for (const auto* rec : coupled_ions()) {
    const auto sys = rec->system(Weighting::MultipletDegenerate);
    const ProductStateSampler sampler(sys);
    const double bound = separable_bound(sys);
    for (int i = 0; i < 10000; ++i) {
      const auto s = sampler.sample(rng);
      st.min_margin = std::min(st.min_margin, s.energy + bound);
      st.worst_identity = std::max(
          st.worst_identity, std::abs(s.energy - s.factorized_energy) / (1.0 + std::abs(s.energy)));
      ++st.samples;
    }
    const auto aligned = sampler.aligned_state();
    st.worst_saturation = std::max(st.worst_saturation, std::abs(aligned.energy + bound) / bound);
  }
  return st;
}

Outcome separable_bound_mc(const SamplingStats& st) {
  Outcome o;
  if (st.min_margin < -1e-9) o.fail("bound violated by " + fmt("%.3e K", -st.min_margin));
  if (st.worst_saturation > 1e-12) o.fail("aligned state misses bound by " + fmt("%.2e", st.worst_saturation));
  o.note(std::to_string(st.samples) + " samples, min(E + |zeta|sl) = " +
         fmt("%.3f K", st.min_margin) + ", aligned rel dev " + fmt("%.1e", st.worst_saturation));
  return o;
}

Outcome product_identity(const SamplingStats& st) {
  Outcome o;
  if (st.worst_identity > 1e-9) o.fail("identity deviation " + fmt("%.2e", st.worst_identity));
  o.note("max rel dev " + fmt("%.2e", st.worst_identity));
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome eu_singlet() {
  Outcome o;
  const auto r = ground_state_analysis(ion_record("Eu").system(Weighting::MultipletDegenerate));
  if (r.degeneracy != 1) {
    o.fail("degeneracy " + std::to_string(r.degeneracy));
    return o;
  }
  double worst = 0.0;
  for (const double p : *r.schmidt_spectrum) worst = std::max(worst, std::abs(p - 1.0 / 7.0));
  if (r.schmidt_spectrum->size() != 7) o.fail("Schmidt rank " + std::to_string(r.schmidt_spectrum->size()));
  if (worst > 1e-9) o.fail("Schmidt deviation " + fmt("%.2e", worst));
  const double dS = std::abs(*r.entropy - std::log(7.0));
  if (dS > 1e-9) o.fail("entropy deviation " + fmt("%.2e", dS));
  o.note("max |lambda - 1/7| = " + fmt("%.1e", worst) + ", |S - ln 7| = " + fmt("%.1e", dS));
  return o;
}

// 10 -----------------------------------------------------------------------
Outcome convention_discrepancy() {
  Outcome o;
  const auto ce = ion_record("Ce");
  const auto multi = entanglement_temperature(ce.system(Weighting::MultipletDegenerate));
  const auto level = entanglement_temperature(ce.system(Weighting::LevelUniform));
  const double closed = 3150.0 / std::log(8.0);
  if (!multi.found() || std::abs(*multi.kelvin - closed) > kDefaultRootTolerance)
    o.fail("Ce multiplet T_E off 3150/ln 8");
  if (!(multi.found() && level.found() && *multi.kelvin < *level.kelvin))
    o.fail("Ce ordering violated");
  std::string pairs;
  for (const auto* rec : coupled_ions()) {
    if (!rec->light()) continue;
    const auto m = entanglement_temperature(rec->system(Weighting::MultipletDegenerate));
    const auto l = entanglement_temperature(rec->system(Weighting::LevelUniform));
    if (!(m.found() && l.found() && *m.kelvin < *l.kelvin)) o.fail(rec->symbol + " ordering");
    if (m.found() && l.found())
      pairs += " " + rec->symbol + " " + fmt("%.1f", *m.kelvin) + "<" + fmt("%.1f", *l.kelvin);
  }
  o.note("Ce multiplet " + fmt("%.4f K", multi.found() ? *multi.kelvin : NAN) +
         " vs 3150/ln8 " + fmt("%.4f K", closed) + ";" + pairs);
  return o;
}

// 11 -----------------------------------------------------------------------
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome property_suite() {
  Outcome o;

  int monotone_violations = 0;
  for (const auto* rec : coupled_ions())
    for (const Weighting w : {Weighting::MultipletDegenerate, Weighting::LevelUniform}) {
      const auto sys = rec->system(w);
      double prev = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < 200; ++i) {
        const double e = mean_energy(sys, 1.0 + 100.0 * i);
        if (e < prev - 1e-9) ++monotone_violations;
        prev = e;
      }
    }
  if (monotone_violations) o.fail(std::to_string(monotone_violations) + " monotonicity violations");

  for (const auto* rec : coupled_ions()) {
    const double w0 = witness(rec->system(Weighting::MultipletDegenerate), 0.0);
    const double want = rec->light() ? -*rec->zeta * as_real(rec->s) : 0.0;
    if (std::abs(w0 - want) > 1e-9 * std::abs(*rec->zeta)) o.fail(rec->symbol + " W(0)");
  }

  double worst_hot = 0.0;
  for (const auto* rec : coupled_ions())
    worst_hot = std::max(worst_hot,
                         std::abs(mean_energy(rec->system(Weighting::MultipletDegenerate), 1e9)));
  if (worst_hot >= 0.1) o.fail("<H>(1e9 K) = " + fmt("%.3f", worst_hot));

  const fs::path dir = fs::temp_directory_path() / ("spinorbit_acceptance_" +
                                                    std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  std::ostringstream sink;
  const int a = cli::run({"spinorbit-witness", "figure1", "--output-dir", (dir / "a").string()},
                         sink, sink);
  const int b = cli::run({"spinorbit-witness", "figure1", "--output-dir", (dir / "b").string()},
                         sink, sink);
  if (a != 0 || b != 0) o.fail("figure1 run failed");
  int files = 0;
  for (const char* ion : {"Ce", "Pr", "Nd", "Pm", "Sm", "Eu"}) {
    const std::string name = std::string("witness_") + ion + ".csv";
    const std::string first = slurp(dir / "a" / name);
    if (first.empty() || first != slurp(dir / "b" / name)) o.fail(name + " not reproducible");
    try {
      std::istringstream in(first);
      const auto rows = read_curve_csv(in);
      if (zero_crossings(rows).size() != 1) o.fail(name + " crossing count");
      ++files;
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  if (slurp(dir / "a" / "figure1.gp") != slurp(dir / "b" / "figure1.gp")) o.fail("script differs");
  std::error_code ec;
  fs::remove_all(dir, ec);

  o.note("monotone on 200-pt grid x 12 ions x 2 conventions; max |<H>(1e9 K)| = " +
         fmt("%.4f K", worst_hot) + "; " + std::to_string(files) + " CSVs byte-identical and parsed");
  return o;
}

}  // namespace

int main() {
  const auto sampling = sample_all();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  Table-1 T_E (level weighting)", table_te},
      {"2  heavy-ion null result", heavy_null},
      {"3  Hund's rules", hund},
      {"4  gap consistency", gap_consistency},
      {"5  oracle spectrum equivalence", oracle_spectrum},
      {"6  oracle trace equivalence", oracle_trace},
      {"7  separable-bound Monte Carlo", [&] { return separable_bound_mc(sampling); }},
      {"8  product-state energy identity", [&] { return product_identity(sampling); }},
      {"9  Eu singlet structure", eu_singlet},
      {"10 convention discrepancy", convention_discrepancy},
      {"11 property suite", property_suite},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::printf("%s  [%s]  %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
