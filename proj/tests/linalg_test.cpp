#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hgstate/linalg.hpp"

namespace hgs {
namespace {

SymmetricMatrix random_symmetric(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SymmetricMatrix a(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) a.set(i, j, nd(rng));
  }
  return a;
}

std::vector<double> eigen_reference(const SymmetricMatrix& a) {
  const auto d = static_cast<Eigen::Index>(a.order());
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = a(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TEST(SymmetricEigenvalues, MatchesEigenOnRandomMatrices) {
  std::mt19937_64 rng(41);
  for (std::size_t d : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
    const auto a = random_symmetric(d, rng);
    const auto got = symmetric_eigenvalues(a);
    const auto want = eigen_reference(a);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(got[k], want[k], 1e-10 * (1.0 + a.frobenius_norm()));
  }
}

TEST(SymmetricEigenvalues, SimpleCases) {
  SymmetricMatrix id(4);
  for (std::size_t i = 0; i < 4; ++i) id.set(i, i, 1.0);
  EXPECT_EQ(symmetric_eigenvalues(id), (std::vector<double>{1, 1, 1, 1}));

  SymmetricMatrix swap(2);
  swap.set(0, 1, 1.0);
  const auto ev = symmetric_eigenvalues(swap);
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], -1.0, 1e-14);

  EXPECT_TRUE(symmetric_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST(SymmetricEigenvalues, TraceAndNormPreserved) {
  std::mt19937_64 rng(43);
  const auto a = random_symmetric(40, rng);
  const auto ev = symmetric_eigenvalues(a);
  double sum = 0.0, sq = 0.0;
  for (double x : ev) {
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum, a.trace(), 1e-10);
  EXPECT_NEAR(std::sqrt(sq), a.frobenius_norm(), 1e-10);
}

TEST(SymmetricEigenvalues, SweepCapRaises) {
  SymmetricMatrix a(3);
  a.set(0, 1, 1.0);
  a.set(1, 2, 0.5);
  EXPECT_THROW(symmetric_eigenvalues(a, JacobiOptions{1e-13, 0}), ConvergenceError);
}

TEST(Determinant, Examples) {
  SymmetricMatrix a(3, 1.0);
  EXPECT_NEAR(determinant(a), 0.0, 1e-14);
  // Unit diagonal with one flipped off-diagonal pair: determinant -4.
  a.set(1, 2, -1.0);
  EXPECT_NEAR(determinant(a), -4.0, 1e-12);
  SymmetricMatrix d(3);
  d.set(0, 0, 2.0);
  d.set(1, 1, 3.0);
  d.set(2, 2, -1.0);
  EXPECT_NEAR(determinant(d), -6.0, 1e-14);
}

TEST(Determinant, EqualsProductOfEigenvalues) {
  std::mt19937_64 rng(47);
  for (std::size_t d = 1; d <= 8; ++d) {
    const auto a = random_symmetric(d, rng);
    double prod = 1.0;
    for (double x : symmetric_eigenvalues(a)) prod *= x;
    EXPECT_NEAR(determinant(a), prod, 1e-9 * (1.0 + std::abs(prod)));
  }
}

TEST(SymmetricMatrix, PrincipalSubmatrix) {
  SymmetricMatrix a(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) a.set(i, j, static_cast<double>(10 * i + j));
  }
  const std::size_t idx[] = {1, 3};
  const auto s = a.principal_submatrix(idx);
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(s(0, 0), 11.0);
  EXPECT_EQ(s(0, 1), 13.0);
  EXPECT_EQ(s(1, 1), 33.0);
  const std::size_t bad[] = {4};
  EXPECT_THROW(a.principal_submatrix(bad), std::out_of_range);
}

}  // namespace
}  // namespace hgs
