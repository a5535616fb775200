#include "spinorbit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "spinorbit/oracle.hpp"
#include "spinorbit/thermal.hpp"

namespace spinorbit {

namespace {

// (2s, 2l, 2j0) for 4f^1 .. 4f^13 as tabulated.
constexpr std::array<std::array<int, 3>, 13> kTabulatedTerms{{{1, 6, 5},
                                                              {2, 10, 8},
                                                              {3, 12, 9},
                                                              {4, 12, 8},
                                                              {5, 10, 5},
                                                              {6, 6, 0},
                                                              {7, 0, 7},
                                                              {6, 6, 12},
                                                              {5, 10, 15},
                                                              {4, 12, 16},
                                                              {3, 12, 15},
                                                              {2, 10, 12},
                                                              {1, 6, 7}}};

constexpr double kSpectrumTol = 1e-9;
constexpr double kJacobiTol = 1e-13;
constexpr double kTraceTol = 1e-10;
constexpr double kBoundSlack = 1e-9;
constexpr double kIdentityTol = 1e-9;
constexpr double kSaturationTol = 1e-12;
constexpr double kTeTol = 1.0;

std::vector<const IonRecord*> coupled(const std::vector<IonRecord>& catalog) {
  std::vector<const IonRecord*> out;
  for (const auto& rec : catalog)
    if (rec.zeta) out.push_back(&rec);
  return out;
}

CheckResult check_hund(const std::vector<IonRecord>& catalog) {
  int mismatches = 0;
  std::string detail;
  for (int n = 1; n <= 13; ++n) {
    const HundTerm t = hund_rules(n);
    const auto& ref = kTabulatedTerms[static_cast<std::size_t>(n - 1)];
    if (t.s.twice() != ref[0] || t.l.twice() != ref[1] || t.j0.twice() != ref[2]) {
      ++mismatches;
      detail += " n4f=" + std::to_string(n);
    }
  }
  for (const auto& rec : catalog) {
    const HundTerm t = hund_rules(rec.n4f);
    if (t.s != rec.s || t.l != rec.l || t.j0 != rec.j0) {
      ++mismatches;
      detail += " " + rec.symbol;
    }
  }
  return {"hund-rules", mismatches == 0, static_cast<double>(mismatches), 0.0,
          mismatches == 0 ? "13 terms match" : "mismatch:" + detail};
}

struct SpectrumChecks {
  CheckResult spectrum;
  CheckResult jacobi;
};

SpectrumChecks check_spectra(const std::vector<IonRecord>& catalog) {
  double worst = 0.0;
  double worst_jacobi = 0.0;
  int max_sweeps = 0;
  std::string worst_ion;
  for (const auto* rec : coupled(catalog)) {
    const SpinOrbitSystem sys = rec->system(Weighting::MultipletDegenerate);
    const SymmetricEigen eig = hermitian_eigen(build_hamiltonian(sys));
    std::vector<double> expected;
    double scale = 1.0;
    for (const auto& m : multiplets(sys)) {
      expected.insert(expected.end(), static_cast<std::size_t>(m.degeneracy), m.energy);
      scale = std::max(scale, std::abs(m.energy));
    }
    std::sort(expected.begin(), expected.end());
    double dev = expected.size() == eig.values.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(expected.size(), eig.values.size()); ++i)
      dev = std::max(dev, std::abs(expected[i] - eig.values[i]) / scale);
    if (dev >= worst) {
      worst = dev;
      worst_ion = rec->symbol;
    }
    worst_jacobi = std::max(worst_jacobi, eig.norm > 0.0 ? eig.off_norm / eig.norm : 0.0);
    max_sweeps = std::max(max_sweeps, eig.sweeps);
  }
  return {{"spectrum-equivalence", worst <= kSpectrumTol, worst, kSpectrumTol,
           "worst ion " + worst_ion},
          {"jacobi-residual", worst_jacobi <= kJacobiTol, worst_jacobi, kJacobiTol,
           "max sweeps " + std::to_string(max_sweeps)}};
}

CheckResult check_traces(const std::vector<IonRecord>& catalog, const VerifyOptions& opt) {
  const auto grid = log_grid(opt.trace_tmin, opt.trace_tmax, opt.trace_grid_points);
  double worst = 0.0;
  for (const auto* rec : coupled(catalog)) {
    const SpinOrbitSystem sys = rec->system(Weighting::MultipletDegenerate);
    const auto spectrum = eigen_spectrum(build_hamiltonian(sys));
    for (const double t : grid) {
      const double dense = thermal_mean_energy_dense(spectrum, t);
      const double closed = mean_energy(sys, t);
      worst = std::max(worst, std::abs(dense - closed) / std::abs(closed));
    }
  }
  return {"trace-equivalence", worst <= kTraceTol, worst, kTraceTol,
          std::to_string(grid.size()) + " temperatures per ion"};
}

std::array<CheckResult, 3> check_product_states(const std::vector<IonRecord>& catalog,
                                                const VerifyOptions& opt) {
  double min_margin = std::numeric_limits<double>::infinity();
  double worst_identity = 0.0;
  double worst_saturation = 0.0;
  std::mt19937_64 rng(opt.seed);
  for (const auto* rec : coupled(catalog)) {
    const SpinOrbitSystem sys = rec->system(Weighting::MultipletDegenerate);
    const ProductStateSampler sampler(sys);
    const double bound = separable_bound(sys);
    for (int i = 0; i < opt.samples_per_ion; ++i) {
      const auto smp = sampler.sample(rng);
      min_margin = std::min(min_margin, smp.energy + bound);
      worst_identity = std::max(worst_identity, std::abs(smp.energy - smp.factorized_energy) /
                                                    (1.0 + std::abs(smp.energy)));
    }
    const auto aligned = sampler.aligned_state();
    worst_saturation = std::max(worst_saturation, std::abs(aligned.energy + bound) / bound);
  }
  return {CheckResult{"product-bound", min_margin >= -kBoundSlack, min_margin, -kBoundSlack,
                      "min (E + |zeta| s l) over " + std::to_string(opt.samples_per_ion) +
                          " samples per ion, seed " + std::to_string(opt.seed)},
          CheckResult{"product-identity", worst_identity <= kIdentityTol, worst_identity,
                      kIdentityTol, "<H> vs zeta <S>.<L>"},
          CheckResult{"bound-saturation", worst_saturation <= kSaturationTol, worst_saturation,
                      kSaturationTol, "aligned basis product state"}};
}

CheckResult check_entanglement_temperatures(const std::vector<IonRecord>& catalog) {
  double worst = 0.0;
  bool ok = true;
  std::string detail;
  for (const auto& rec : catalog) {
    if (!rec.zeta) {
      if (rec.te_paper) {
        ok = false;
        detail += " " + rec.symbol + ":reference-without-coupling";
      }
      continue;
    }
    for (const Weighting w : {Weighting::LevelUniform, Weighting::MultipletDegenerate}) {
      const auto te = entanglement_temperature(rec.system(w));
      if (rec.te_paper) {
        if (w != Weighting::LevelUniform) continue;
        if (!te.found()) {
          ok = false;
          detail += " " + rec.symbol + ":missing";
          continue;
        }
        const double dev = std::abs(*te.kelvin - *rec.te_paper);
        worst = std::max(worst, dev);
        if (dev > kTeTol) {
          ok = false;
          detail += " " + rec.symbol + ":" + std::to_string(*te.kelvin);
        }
      } else if (te.found()) {
        ok = false;
        detail += " " + rec.symbol + ":unexpected-crossing";
      }
    }
  }
  return {"te-reproduction", ok, worst, kTeTol, ok ? "level convention" : "failed:" + detail};
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) out.push_back(lo * std::exp(step * static_cast<double>(i)));
  if (n > 1) out.back() = hi;
  return out;
}

std::vector<CheckResult> run_verification(const std::vector<IonRecord>& catalog,
                                          const VerifyOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_hund(catalog));
  auto [spectrum, jacobi] = check_spectra(catalog);
  out.push_back(spectrum);
  out.push_back(jacobi);
  out.push_back(check_traces(catalog, options));
  for (auto& c : check_product_states(catalog, options)) out.push_back(c);
  out.push_back(check_entanglement_temperatures(catalog));
  return out;
}

}  // namespace spinorbit
