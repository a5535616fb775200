#include "spinorbit/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinorbit/errors.hpp"

namespace spinorbit {

namespace {

double effective_degeneracy(const SpinOrbitSystem& sys, const Multiplet& m) {
  return sys.weighting == Weighting::MultipletDegenerate ? static_cast<double>(m.degeneracy)
                                                         : 1.0;
}

double lowest_energy(const std::vector<Multiplet>& levels) {
  return std::min_element(levels.begin(), levels.end(), [](const auto& a, const auto& b) {
           return a.energy < b.energy;
         })->energy;
}

void require_positive(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("temperature must be positive and finite, got " +
                      std::to_string(temperature));
}

struct ShiftedSums {
  double partition = 0.0;
  double mean = 0.0;
};

// <H> = E_min + sum w (E - E_min) / sum w; the excess term is never negative.
ShiftedSums shifted_sums(const SpinOrbitSystem& sys, double temperature) {
  const auto levels = multiplets(sys);
  const double e_min = lowest_energy(levels);
  double z = 0.0;
  double excess = 0.0;
  for (const auto& m : levels) {
    const double w = effective_degeneracy(sys, m) * std::exp(-(m.energy - e_min) / temperature);
    z += w;
    excess += w * (m.energy - e_min);
  }
  return {z, e_min + excess / z};
}

bool hamiltonian_vanishes(const SpinOrbitSystem& sys) {
  return sys.interaction_free() || sys.zeta == 0.0;
}

}  // namespace

const char* to_string(NoEntanglementReason r) {
  switch (r) {
    case NoEntanglementReason::NoCrossing:
      return "no-crossing";
    case NoEntanglementReason::WitnessDegenerate:
      return "witness-degenerate";
  }
  return "?";
}

double weight(const SpinOrbitSystem& sys, const Multiplet& m, double temperature) {
  require_positive(temperature);
  const double e_min = lowest_energy(multiplets(sys));
  return effective_degeneracy(sys, m) * std::exp(-(m.energy - e_min) / temperature);
}

double mean_energy(const SpinOrbitSystem& sys, double temperature) {
  require_positive(temperature);
  return shifted_sums(sys, temperature).mean;
}

double mean_energy_at_zero(const SpinOrbitSystem& sys) { return lowest_energy(multiplets(sys)); }

double mean_energy_at_infinity(const SpinOrbitSystem& sys) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& m : multiplets(sys)) {
    const double g = effective_degeneracy(sys, m);
    num += g * m.energy;
    den += g;
  }
  return num / den;
}

double witness(const SpinOrbitSystem& sys, double temperature) {
  if (temperature < 0.0 || std::isnan(temperature))
    throw DomainError("temperature must be non-negative");
  if (temperature == 0.0) return mean_energy_at_zero(sys) + separable_bound(sys);
  return mean_energy(sys, temperature) + separable_bound(sys);
}

ThermalPoint thermal_point(const SpinOrbitSystem& sys, double temperature) {
  require_positive(temperature);
  const ShiftedSums sums = shifted_sums(sys, temperature);
  return {temperature, sums.partition, sums.mean, sums.mean + separable_bound(sys)};
}

EntanglementTemperature entanglement_temperature(const SpinOrbitSystem& sys, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("root tolerance must be positive");
  if (hamiltonian_vanishes(sys)) return {std::nullopt, NoEntanglementReason::WitnessDegenerate};
  if (witness(sys, 0.0) >= 0.0) return {std::nullopt, NoEntanglementReason::NoCrossing};
  if (mean_energy_at_infinity(sys) + separable_bound(sys) <= 0.0)
    throw DomainError(std::string("witness never becomes positive under the ") +
                      to_string(sys.weighting) + " weighting; no finite crossing");

  constexpr double kBracketCap = 1e9;
  double lo = 0.0;
  double hi = 1.0;
  double w_lo = witness(sys, 0.0);
  double w_hi = witness(sys, hi);
  while (w_hi < 0.0) {
    if (hi >= kBracketCap)
      throw InternalError("witness still negative at the 1e9 K bracket cap");
    lo = hi;
    w_lo = w_hi;
    hi = std::min(2.0 * hi, kBracketCap);
    w_hi = witness(sys, hi);
  }

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double w_mid = witness(sys, mid);
    if (w_mid < 0.0) {
      lo = mid;
      w_lo = w_mid;
    } else {
      hi = mid;
      w_hi = w_mid;
    }
  }
  // w_lo < 0 <= w_hi, so the interpolant stays inside [lo, hi].
  const double root = lo - w_lo * (hi - lo) / (w_hi - w_lo);
  return {std::clamp(root, lo, hi), std::nullopt};
}

WitnessCurve witness_curve(const SpinOrbitSystem& sys, double tmin, double tmax, int steps) {
  if (!(tmin > 0.0) || !(tmax > tmin) || !std::isfinite(tmax))
    throw DomainError("temperature range requires 0 < tmin < tmax");
  if (steps < 2) throw DomainError("a witness curve needs at least 2 steps");

  WitnessCurve curve{sys, {}};
  curve.points.reserve(static_cast<std::size_t>(steps));
  const double dt = (tmax - tmin) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = i == steps - 1 ? tmax : tmin + dt * static_cast<double>(i);
    curve.points.push_back(thermal_point(sys, t));
  }
  return curve;
}

namespace detail {

double mean_energy_unshifted(const SpinOrbitSystem& sys, double temperature) {
  require_positive(temperature);
  double z = 0.0;
  double num = 0.0;
  for (const auto& m : multiplets(sys)) {
    const double w = effective_degeneracy(sys, m) * std::exp(-m.energy / temperature);
    z += w;
    num += w * m.energy;
  }
  return num / z;
}

}  // namespace detail

}  // namespace spinorbit
