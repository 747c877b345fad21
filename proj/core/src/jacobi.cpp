#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hgstate/linalg.hpp"

namespace hgs {

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double SymmetricMatrix::off_diagonal_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (i != j) s += (*this)(i, j) * (*this)(i, j);
    }
  }
  return std::sqrt(s);
}

bool SymmetricMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

SymmetricMatrix SymmetricMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SymmetricMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= order_) throw std::out_of_range("principal index out of range");
    for (std::size_t b = a; b < indices.size(); ++b) {
      sub.set(a, b, (*this)(indices[a], indices[b]));
    }
  }
  return sub;
}

// Rotations touch rows and columns p, q of the full storage; only the upper
// triangle is read when accumulating the off-diagonal norm.
class JacobiWorkspace {
 public:
  explicit JacobiWorkspace(const SymmetricMatrix& a) : n_(a.order()), a_(a.data_) {}

  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  double off_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) s += at(i, j) * at(i, j);
    }
    return std::sqrt(2.0 * s);
  }

  void rotate(std::size_t p, std::size_t q) {
    const double apq = at(p, q);
    if (apq == 0.0) return;
    const double app = at(p, p);
    const double aqq = at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::hypot(t, 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = 0.0;
    at(q, p) = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == p || k == q) continue;
      const double akp = at(k, p);
      const double akq = at(k, q);
      const double nkp = akp - s * (akq + tau * akp);
      const double nkq = akq + s * (akp - tau * akq);
      at(k, p) = nkp;
      at(p, k) = nkp;
      at(k, q) = nkq;
      at(q, k) = nkq;
    }
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = at(i, i);
    return d;
  }

  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& a, const JacobiOptions& opts) {
  if (a.order() > kMaxEigenOrder) {
    throw std::invalid_argument("matrix order " + std::to_string(a.order()) +
                                " exceeds the dense eigensolver cap " +
                                std::to_string(kMaxEigenOrder));
  }
  if (!a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");

  JacobiWorkspace w(a);
  const double target = opts.relative_tolerance * a.frobenius_norm();
  const std::size_t n = w.order();
  int sweep = 0;
  while (w.off_norm() > target) {
    if (sweep++ == opts.max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(opts.max_sweeps) + " sweeps (order " +
                             std::to_string(n) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) w.rotate(p, q);
    }
  }
  auto eig = w.diagonal();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double determinant(const SymmetricMatrix& a) {
  const std::size_t n = a.order();
  std::vector<double> m(a.data().begin(), a.data().end());
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (m[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      det = -det;
    }
    const double d = m[col * n + col];
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
    }
  }
  return det;
}

}  // namespace hgs
