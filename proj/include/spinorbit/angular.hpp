#pragma once

#include <vector>

#include "spinorbit/half_int.hpp"

namespace spinorbit {

/// How multiplets are weighted in Boltzmann sums.
///
/// MultipletDegenerate weights each multiplet by 2j+1 and is the full
/// Hilbert-space trace of exp(-H/T). LevelUniform gives every multiplet unit
/// weight; it is the convention that reproduces the tabulated rare-earth
/// entanglement temperatures.
enum class Weighting { MultipletDegenerate, LevelUniform };

const char* to_string(Weighting w);

/// H = zeta S.L on the (2s+1)(2l+1) product space. Energies in kelvin (k_B = 1).
struct SpinOrbitSystem {
  HalfInt s;
  HalfInt l;
  double zeta = 0.0;
  Weighting weighting = Weighting::MultipletDegenerate;

  /// Throws DomainError on negative s, l or non-finite zeta.
  SpinOrbitSystem(HalfInt s, HalfInt l, double zeta,
                  Weighting weighting = Weighting::MultipletDegenerate);

  std::int64_t dimension() const { return s.multiplicity() * l.multiplicity(); }

  /// s*l == 0: the Hamiltonian vanishes identically.
  bool interaction_free() const { return s.twice() == 0 || l.twice() == 0; }

  SpinOrbitSystem with_weighting(Weighting w) const {
    return SpinOrbitSystem(s, l, zeta, w);
  }
};

struct Multiplet {
  HalfInt j;
  std::int64_t degeneracy = 0;
  double energy = 0.0;
};

/// (zeta/2)[j(j+1) - s(s+1) - l(l+1)]. Throws DomainError unless |l-s| <= j <= l+s
/// with j - (l+s) integral.
double level_energy(const SpinOrbitSystem& sys, HalfInt j);

/// All multiplets, ascending j from |l-s| to l+s.
std::vector<Multiplet> multiplets(const SpinOrbitSystem& sys);

/// j0 = |l-s| for zeta > 0, l+s for zeta < 0; the single multiplet when s*l == 0.
Multiplet ground_multiplet(const SpinOrbitSystem& sys);

/// |zeta| s l, the magnitude of the lowest energy any product state can reach.
double separable_bound(const SpinOrbitSystem& sys);

}  // namespace spinorbit
