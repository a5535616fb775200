#pragma once

#include <optional>
#include <vector>

#include "spinorbit/angular.hpp"

namespace spinorbit {

/// Thermal quantities at one temperature. `partition` is the sum of weights
/// shifted by the lowest level energy, so it lies in [g_ground, dimension].
struct ThermalPoint {
  double temperature = 0.0;
  double partition = 0.0;
  double mean_energy = 0.0;
  double witness = 0.0;
};

struct WitnessCurve {
  SpinOrbitSystem system;
  std::vector<ThermalPoint> points;
};

/// g_eff exp(-(E_j - E_min)/T); g_eff = 2j+1 (MultipletDegenerate) or 1 (LevelUniform).
double weight(const SpinOrbitSystem& sys, const Multiplet& m, double temperature);

/// Thermal expectation of H. Throws DomainError for T <= 0.
double mean_energy(const SpinOrbitSystem& sys, double temperature);

/// Zero-temperature limit: the lowest level energy.
double mean_energy_at_zero(const SpinOrbitSystem& sys);

/// Infinite-temperature limit: the g_eff-weighted average of the level energies.
double mean_energy_at_infinity(const SpinOrbitSystem& sys);

/// <H> + |zeta| s l. Negative values certify spin-orbit entanglement.
/// T = 0 is the exact ground-state limit; T < 0 throws DomainError.
double witness(const SpinOrbitSystem& sys, double temperature);

ThermalPoint thermal_point(const SpinOrbitSystem& sys, double temperature);

enum class NoEntanglementReason {
  /// The witness is nonnegative at T = 0 and therefore at every temperature.
  NoCrossing,
  /// H vanishes identically (s l = 0 or zeta = 0); the witness is zero.
  WitnessDegenerate,
};

const char* to_string(NoEntanglementReason r);

struct EntanglementTemperature {
  std::optional<double> kelvin;
  std::optional<NoEntanglementReason> reason;

  bool found() const { return kelvin.has_value(); }
};

inline constexpr double kDefaultRootTolerance = 1e-3;

/// Temperature at which the witness changes sign. The root is bracketed by
/// doubling from 1 K (capped at 1e9 K), bisected to width `tolerance`, then
/// refined by one secant step inside the final bracket.
///
/// Throws DomainError for tolerance <= 0 and for a LevelUniform system whose
/// witness stays negative at all temperatures (e.g. s = l = 1/2).
EntanglementTemperature entanglement_temperature(const SpinOrbitSystem& sys,
                                                 double tolerance = kDefaultRootTolerance);

/// `steps` uniformly spaced points from tmin to tmax inclusive.
WitnessCurve witness_curve(const SpinOrbitSystem& sys, double tmin, double tmax, int steps);

namespace detail {
/// Boltzmann sum without the overflow shift; finite only when every
/// |E_j|/T stays within the exponent range.
double mean_energy_unshifted(const SpinOrbitSystem& sys, double temperature);
}  // namespace detail

}  // namespace spinorbit
