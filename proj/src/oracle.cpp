#include "spinorbit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spinorbit/errors.hpp"

namespace spinorbit {

AngularMomentumMatrices angular_momentum_matrices(HalfInt j) {
  if (j.twice() < 0) throw DomainError("angular momentum must be non-negative");
  const auto dim = static_cast<std::size_t>(j.multiplicity());
  AngularMomentumMatrices out{DenseOperator(dim), DenseOperator(dim), DenseOperator(dim)};
  const std::int64_t tj = j.twice();
  for (std::size_t k = 0; k < dim; ++k) {
    // index k holds 2m = 2j - 2k
    const std::int64_t tm = tj - 2 * static_cast<std::int64_t>(k);
    out.jz(k, k) = static_cast<double>(tm) / 2.0;
    if (k > 0) {
      // <m+1| J+ |m> = sqrt(j(j+1) - m(m+1)) = sqrt((2j)(2j+2) - (2m)(2m+2)) / 2
      const std::int64_t four = tj * (tj + 2) - tm * (tm + 2);
      out.jplus(k - 1, k) = std::sqrt(static_cast<double>(four)) / 2.0;
    }
  }
  out.jminus = out.jplus.adjoint();
  return out;
}

DenseOperator build_hamiltonian(const SpinOrbitSystem& sys) {
  const auto spin = angular_momentum_matrices(sys.s);
  const auto orb = angular_momentum_matrices(sys.l);
  DenseOperator h = kron(spin.jz, orb.jz);
  h += 0.5 * (kron(spin.jplus, orb.jminus) + kron(spin.jminus, orb.jplus));
  h *= sys.zeta;
  return h;
}

double thermal_mean_energy_dense(const std::vector<double>& spectrum, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("temperature must be positive and finite");
  if (spectrum.empty()) throw DomainError("empty spectrum");
  const double e_min = *std::min_element(spectrum.begin(), spectrum.end());
  double z = 0.0;
  double excess = 0.0;
  for (const double e : spectrum) {
    const double w = std::exp(-(e - e_min) / temperature);
    z += w;
    excess += w * (e - e_min);
  }
  return e_min + excess / z;
}

double thermal_mean_energy_dense(const SpinOrbitSystem& sys, double temperature) {
  return thermal_mean_energy_dense(eigen_spectrum(build_hamiltonian(sys)), temperature);
}

namespace {

void normalize(std::vector<Complex>& v) {
  double n2 = 0.0;
  for (const auto& z : v) n2 += std::norm(z);
  if (!(n2 > 0.0)) throw DomainError("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : v) z *= inv;
}

std::array<double, 3> vector_expectation(const AngularMomentumMatrices& m,
                                         const std::vector<Complex>& v) {
  // <J+> = <Jx> + i<Jy>
  const Complex plus = m.jplus.expectation(v);
  return {plus.real(), plus.imag(), m.jz.expectation(v).real()};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double length(const std::array<double, 3>& a) { return std::sqrt(dot(a, a)); }

std::vector<Complex> product_vector(const std::vector<Complex>& outer,
                                    const std::vector<Complex>& inner) {
  std::vector<Complex> out;
  out.reserve(outer.size() * inner.size());
  for (const auto& a : outer)
    for (const auto& b : inner) out.push_back(a * b);
  return out;
}

}  // namespace

ProductStateSampler::ProductStateSampler(const SpinOrbitSystem& sys)
    : sys_(sys),
      spin_(angular_momentum_matrices(sys.s)),
      orbital_(angular_momentum_matrices(sys.l)),
      hamiltonian_(build_hamiltonian(sys)) {}

ProductStateSample ProductStateSampler::evaluate(std::vector<Complex> spin_state,
                                                 std::vector<Complex> orbital_state) const {
  if (spin_state.size() != spin_.jz.dim() || orbital_state.size() != orbital_.jz.dim())
    throw DomainError("factor state dimension mismatch");
  normalize(spin_state);
  normalize(orbital_state);

  ProductStateSample out;
  out.spin_vector = vector_expectation(spin_, spin_state);
  out.orbital_vector = vector_expectation(orbital_, orbital_state);
  const double ls = length(out.spin_vector);
  const double ll = length(out.orbital_vector);
  out.cos_theta =
      (ls > 0.0 && ll > 0.0)
          ? std::clamp(dot(out.spin_vector, out.orbital_vector) / (ls * ll), -1.0, 1.0)
          : 1.0;
  out.factorized_energy = sys_.zeta * dot(out.spin_vector, out.orbital_vector);
  out.energy = hamiltonian_.expectation(product_vector(spin_state, orbital_state)).real();
  out.spin_state = std::move(spin_state);
  out.orbital_state = std::move(orbital_state);
  return out;
}

ProductStateSample ProductStateSampler::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&](std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z = Complex(re, im);
    }
    return v;
  };
  auto spin_state = draw(spin_.jz.dim());
  auto orbital_state = draw(orbital_.jz.dim());
  return evaluate(std::move(spin_state), std::move(orbital_state));
}

ProductStateSample ProductStateSampler::aligned_state() const {
  std::vector<Complex> spin_state(spin_.jz.dim());
  std::vector<Complex> orbital_state(orbital_.jz.dim());
  spin_state.front() = 1.0;  // m_s = +s
  if (sys_.zeta >= 0.0)
    orbital_state.back() = 1.0;  // m_l = -l
  else
    orbital_state.front() = 1.0;
  return evaluate(std::move(spin_state), std::move(orbital_state));
}

ProductStateSample sample_product_state(const SpinOrbitSystem& sys, std::mt19937_64& rng) {
  return ProductStateSampler(sys).sample(rng);
}

DenseOperator reduced_outer_state(const std::vector<Complex>& psi, std::size_t dim_outer,
                                  std::size_t dim_inner) {
  if (psi.size() != dim_outer * dim_inner) throw DomainError("state dimension mismatch");
  DenseOperator rho(dim_outer);
  for (std::size_t a = 0; a < dim_outer; ++a)
    for (std::size_t b = 0; b < dim_outer; ++b) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim_inner; ++k)
        acc += psi[a * dim_inner + k] * std::conj(psi[b * dim_inner + k]);
      rho(a, b) = acc;
    }
  return rho;
}

double von_neumann_entropy(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (const double p : probabilities)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

GroundStateAnalysis ground_state_analysis(const SpinOrbitSystem& sys) {
  if (sys.zeta == 0.0) throw DomainError("ground-state analysis requires zeta != 0");
  const DenseOperator h = build_hamiltonian(sys);
  const SymmetricEigen eig = hermitian_eigen(h, {.vectors = true});
  const std::size_t n = h.dim();

  const double threshold = 1e-6 * std::abs(sys.zeta);
  const double e0 = eig.values.front();
  GroundStateAnalysis out;
  out.degeneracy = static_cast<int>(
      std::count_if(eig.values.begin(), eig.values.end(),
                    [&](double e) { return e - e0 <= threshold; }));
  if (out.degeneracy != 1) return out;

  std::vector<Complex> psi(n);
  for (std::size_t r = 0; r < n; ++r) psi[r] = eig.vectors[r * n];
  const auto dim_s = static_cast<std::size_t>(sys.s.multiplicity());
  const auto dim_l = static_cast<std::size_t>(sys.l.multiplicity());
  std::vector<double> lambdas = eigen_spectrum(reduced_outer_state(psi, dim_s, dim_l));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  out.entropy = von_neumann_entropy(lambdas);
  out.schmidt_spectrum = std::move(lambdas);
  return out;
}

}  // namespace spinorbit
