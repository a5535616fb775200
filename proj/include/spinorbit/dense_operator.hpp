#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spinorbit {

using Complex = std::complex<double>;

/// Square complex matrix, row-major.
class DenseOperator {
 public:
  DenseOperator() = default;
  explicit DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  DenseOperator adjoint() const;
  double max_abs() const;
  double frobenius_norm() const;
  Complex trace() const;

  /// A(a,b) == conj(A(b,a)) within `rel_tol` times the largest entry.
  bool is_hermitian(double rel_tol = 1e-12) const;
  bool is_real() const;

  DenseOperator& operator+=(const DenseOperator& o);
  DenseOperator& operator-=(const DenseOperator& o);
  DenseOperator& operator*=(Complex factor);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(DenseOperator a, Complex f) { return a *= f; }
  friend DenseOperator operator*(Complex f, DenseOperator a) { return a *= f; }
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

  /// A |v>
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  /// <v| A |v>
  Complex expectation(const std::vector<Complex>& v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product; `a` indexes the slow (outer) factor.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Output of the cyclic Jacobi solver for a real symmetric matrix.
struct SymmetricEigen {
  std::vector<double> values;  // ascending
  /// Column k (row-major, values[k]'s eigenvector) when requested, else empty.
  std::vector<double> vectors;
  int sweeps = 0;
  /// Off-diagonal Frobenius norm at exit and the (invariant) full Frobenius norm.
  double off_norm = 0.0;
  double norm = 0.0;
};

struct JacobiOptions {
  double rel_tol = 1e-13;
  int max_sweeps = 50;
  bool vectors = false;
};

/// Cyclic Jacobi on a real symmetric n x n matrix (row-major, consumed).
/// Throws ConvergenceError when the sweep cap is hit.
SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, const JacobiOptions& opt = {});

/// Real-symmetric or complex-Hermitian diagonalization. Complex input goes
/// through the 2n real embedding [[A, -B], [B, A]], whose spectrum is that of
/// A + iB with every eigenvalue doubled. Throws DomainError for non-Hermitian input.
SymmetricEigen hermitian_eigen(const DenseOperator& op, const JacobiOptions& opt = {});

/// Ascending eigenvalues of a Hermitian operator.
std::vector<double> eigen_spectrum(const DenseOperator& op);

}  // namespace spinorbit
