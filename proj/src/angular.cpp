#include "spinorbit/angular.hpp"

#include <cmath>

#include "spinorbit/errors.hpp"

namespace spinorbit {

const char* to_string(Weighting w) {
  switch (w) {
    case Weighting::MultipletDegenerate:
      return "multiplet";
    case Weighting::LevelUniform:
      return "level";
  }
  return "?";
}

SpinOrbitSystem::SpinOrbitSystem(HalfInt s_, HalfInt l_, double zeta_, Weighting w)
    : s(s_), l(l_), zeta(zeta_), weighting(w) {
  if (s.twice() < 0 || l.twice() < 0)
    throw DomainError("spin and orbital quantum numbers must be non-negative");
  if (!std::isfinite(zeta)) throw DomainError("spin-orbit coupling must be finite");
}

double level_energy(const SpinOrbitSystem& sys, HalfInt j) {
  const HalfInt lo = abs(sys.l - sys.s);
  const HalfInt hi = sys.l + sys.s;
  if (j < lo || j > hi || (j - lo).twice() % 2 != 0)
    throw DomainError("j = " + j.str() + " is not a multiplet of s = " + sys.s.str() +
                      ", l = " + sys.l.str());
  // 4[j(j+1) - s(s+1) - l(l+1)], exact.
  const std::int64_t quad = j.four_casimir() - sys.s.four_casimir() - sys.l.four_casimir();
  return (sys.zeta / 2.0) * (static_cast<double>(quad) / 4.0);
}

std::vector<Multiplet> multiplets(const SpinOrbitSystem& sys) {
  std::vector<Multiplet> out;
  const HalfInt hi = sys.l + sys.s;
  for (HalfInt j = abs(sys.l - sys.s); j <= hi; j += HalfInt::from_int(1))
    out.push_back({j, j.multiplicity(), level_energy(sys, j)});
  return out;
}

Multiplet ground_multiplet(const SpinOrbitSystem& sys) {
  if (sys.interaction_free()) {
    const HalfInt j = sys.l + sys.s;
    return {j, j.multiplicity(), level_energy(sys, j)};
  }
  if (sys.zeta == 0.0)
    throw DomainError("ground multiplet undefined for zeta = 0 (all levels degenerate)");
  const HalfInt j0 = sys.zeta > 0.0 ? abs(sys.l - sys.s) : sys.l + sys.s;
  return {j0, j0.multiplicity(), level_energy(sys, j0)};
}

double separable_bound(const SpinOrbitSystem& sys) {
  // (|zeta|/2)(2sl) shares its rounding with level_energy at the heavy ground level.
  const double two_sl = static_cast<double>(sys.s.twice() * sys.l.twice()) / 2.0;
  return (std::abs(sys.zeta) / 2.0) * two_sl;
}

}  // namespace spinorbit
