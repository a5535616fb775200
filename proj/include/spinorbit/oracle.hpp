#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "spinorbit/angular.hpp"
#include "spinorbit/dense_operator.hpp"

namespace spinorbit {

/// Standard |j, m> representation, basis ordered m = j, j-1, ..., -j.
struct AngularMomentumMatrices {
  DenseOperator jz;
  DenseOperator jplus;
  DenseOperator jminus;
};

AngularMomentumMatrices angular_momentum_matrices(HalfInt j);

/// zeta [Sz Lz + (S+ L- + S- L+)/2] on |m_s, m_l>, m_s outer, both descending.
DenseOperator build_hamiltonian(const SpinOrbitSystem& sys);

/// Mean energy from the dense spectrum, every eigenvalue weighted once
/// (this is the MultipletDegenerate trace). Throws DomainError for T <= 0.
double thermal_mean_energy_dense(const SpinOrbitSystem& sys, double temperature);

/// Same, reusing a spectrum already computed for `sys`.
double thermal_mean_energy_dense(const std::vector<double>& spectrum, double temperature);

struct ProductStateSample {
  std::vector<Complex> spin_state;
  std::vector<Complex> orbital_state;
  std::array<double, 3> spin_vector{};
  std::array<double, 3> orbital_vector{};
  double cos_theta = 0.0;
  /// <psi|H|psi> evaluated with the dense Hamiltonian on the product vector.
  double energy = 0.0;
  /// zeta <S>.<L> from the one-body expectation values.
  double factorized_energy = 0.0;
};

/// Draws random pure product states |phi_S> (x) |phi_L> with independent
/// standard complex Gaussian amplitudes. Holds the dense operators, so one
/// sampler serves many draws.
class ProductStateSampler {
 public:
  explicit ProductStateSampler(const SpinOrbitSystem& sys);

  ProductStateSample sample(std::mt19937_64& rng) const;

  /// Evaluates a given pair of (not necessarily normalized) factor states.
  ProductStateSample evaluate(std::vector<Complex> spin_state,
                              std::vector<Complex> orbital_state) const;

  /// |m_s = s> (x) |m_l = -l> for zeta >= 0, |s> (x) |l> for zeta < 0; attains -|zeta| s l.
  ProductStateSample aligned_state() const;

  const DenseOperator& hamiltonian() const { return hamiltonian_; }

 private:
  SpinOrbitSystem sys_;
  AngularMomentumMatrices spin_;
  AngularMomentumMatrices orbital_;
  DenseOperator hamiltonian_;
};

ProductStateSample sample_product_state(const SpinOrbitSystem& sys, std::mt19937_64& rng);

struct GroundStateAnalysis {
  int degeneracy = 0;
  /// Eigenvalues of the spin reduced state, descending. Only for a unique ground state.
  std::optional<std::vector<double>> schmidt_spectrum;
  /// Von Neumann entropy of the spin reduced state, in nats.
  std::optional<double> entropy;
};

/// Degeneracy counted within 1e-6 |zeta| of the lowest eigenvalue.
/// Throws DomainError for zeta == 0.
GroundStateAnalysis ground_state_analysis(const SpinOrbitSystem& sys);

/// Partial trace over the inner (orbital) factor of a pure state on
/// C^{dim_outer} (x) C^{dim_inner}.
DenseOperator reduced_outer_state(const std::vector<Complex>& psi, std::size_t dim_outer,
                                  std::size_t dim_inner);

double von_neumann_entropy(const std::vector<double>& probabilities);

}  // namespace spinorbit
