#include "spinorbit/dense_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinorbit/errors.hpp"

namespace spinorbit {

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double DenseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double DenseOperator::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex DenseOperator::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool DenseOperator::is_hermitian(double rel_tol) const {
  const double tol = rel_tol * max_abs();
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool DenseOperator::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return z.imag() == 0.0; });
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw DomainError("operator dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
  if (o.dim_ != dim_) throw DomainError("operator dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex factor) {
  for (auto& z : entries_) z *= factor;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw DomainError("operator dimension mismatch");
  const std::size_t n = a.dim();
  DenseOperator out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

std::vector<Complex> DenseOperator::apply(const std::vector<Complex>& v) const {
  if (v.size() != dim_) throw DomainError("vector dimension mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Complex DenseOperator::expectation(const std::vector<Complex>& v) const {
  const auto av = apply(v);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += std::conj(v[i]) * av[i];
  return acc;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  DenseOperator out(na * nb);
  for (std::size_t ar = 0; ar < na; ++ar)
    for (std::size_t ac = 0; ac < na; ++ac) {
      const Complex x = a(ar, ac);
      if (x == 0.0) continue;
      for (std::size_t br = 0; br < nb; ++br)
        for (std::size_t bc = 0; bc < nb; ++bc) out(ar * nb + br, ac * nb + bc) = x * b(br, bc);
    }
  return out;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) sum += a[r * n + c] * a[r * n + c];
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n, const JacobiOptions& opt) {
  if (a.size() != n * n) throw DomainError("matrix storage does not match dimension");
  auto at = [&a, n](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

  std::vector<double> v;
  if (opt.vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  SymmetricEigen result;
  result.norm = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double target = opt.rel_tol * result.norm;

  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > target) {
    if (sweep == opt.max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(opt.max_sweeps) +
                                 " sweeps; off-diagonal norm " + std::to_string(off),
                             off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;

        if (opt.vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });

  result.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) result.values[k] = at(order[k], order[k]);
  if (opt.vectors) {
    result.vectors.resize(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) result.vectors[r * n + k] = v[r * n + order[k]];
  }
  result.sweeps = sweep;
  result.off_norm = off;
  return result;
}

SymmetricEigen hermitian_eigen(const DenseOperator& op, const JacobiOptions& opt) {
  if (!op.is_hermitian()) throw DomainError("eigen_spectrum requires a Hermitian operator");
  const std::size_t n = op.dim();

  if (op.is_real()) {
    std::vector<double> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] = op(r, c).real();
    return jacobi_eigen(std::move(a), n, opt);
  }

  if (opt.vectors)
    throw DomainError("eigenvectors are only provided for real symmetric operators");
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = op(r, c);
      a[r * m + c] = z.real();
      a[(r + n) * m + (c + n)] = z.real();
      a[r * m + (c + n)] = -z.imag();
      a[(r + n) * m + c] = z.imag();
    }
  SymmetricEigen doubled = jacobi_eigen(std::move(a), m, opt);
  SymmetricEigen result;
  result.values.reserve(n);
  for (std::size_t k = 0; k < m; k += 2) result.values.push_back(doubled.values[k]);
  result.sweeps = doubled.sweeps;
  // The embedding doubles every squared entry.
  result.off_norm = doubled.off_norm / std::sqrt(2.0);
  result.norm = doubled.norm / std::sqrt(2.0);
  return result;
}

std::vector<double> eigen_spectrum(const DenseOperator& op) { return hermitian_eigen(op).values; }

}  // namespace spinorbit
