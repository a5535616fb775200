#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinorbit/ion_catalog.hpp"

namespace spinorbit {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// The measured quantity compared against `threshold`.
  double residual = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples_per_ion = 10000;
  int trace_grid_points = 50;
  double trace_tmin = 1.0;
  double trace_tmax = 1e5;
};

/// Cross-checks the closed-form model against the dense oracle and the
/// reference table: Hund's rules, spectrum and trace equivalence, the
/// product-state bound and identity, and the tabulated T_E.
std::vector<CheckResult> run_verification(const std::vector<IonRecord>& catalog,
                                          const VerifyOptions& options = {});

/// n points from lo to hi inclusive, geometric spacing.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace spinorbit
