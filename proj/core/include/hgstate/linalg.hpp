#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hgs {

/// Dense real symmetric matrix, full row-major storage. Writes through set()
/// keep both triangles identical.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order, double fill = 0.0)
      : order_(order), data_(order * order, fill) {}

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    data_[i * order_ + j] = v;
    data_[j * order_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * order_, order_};
  }
  std::span<const double> data() const noexcept { return data_; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  double off_diagonal_norm() const noexcept;
  bool is_symmetric() const noexcept;

  SymmetricMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  friend class JacobiWorkspace;
  std::size_t order_ = 0;
  std::vector<double> data_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  // Converged once the off-diagonal Frobenius norm drops below
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-13;
  int max_sweeps = 100;
};

inline constexpr std::size_t kMaxEigenOrder = std::size_t{1} << 13;

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Throws ConvergenceError if the sweep cap is reached.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& a, const JacobiOptions& opts = {});

/// Determinant via Gaussian elimination with partial pivoting.
double determinant(const SymmetricMatrix& a);

}  // namespace hgs
