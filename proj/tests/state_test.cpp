#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hgstate/state.hpp"
#include "test_support.hpp"

namespace hgs {
namespace {

TEST(BuildState, DensityExampleSigns) {
  const Hypergraph g(4, {{1}, {0, 2}, {1, 3}, {0, 1, 2}});
  const auto s = build_state(g);
  EXPECT_EQ(s.signs(), (std::vector<int>{1, 1, 1, 1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 1}));
  EXPECT_EQ(s.signs(), oracle::oracle_signs(testing::to_oracle(g)));
}

TEST(BuildState, WorkedExampleSigns) {
  const Hypergraph g(4, {{0, 1}, {0, 2}, {0, 1, 3}});
  EXPECT_EQ(build_state(g).to_compact_string(), "++++++++++---++-");
}

TEST(BuildState, SmallCases) {
  EXPECT_EQ(build_state(Hypergraph(2, {{0, 1}})).signs(), (std::vector<int>{1, 1, 1, -1}));
  EXPECT_EQ(build_state(Hypergraph(3)), SignState::all_plus(3));
  const auto s = build_state(Hypergraph(1, {{0}}));
  EXPECT_NEAR(s.amplitude(0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitude(1), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(BuildState, MatchesBooleanFunction) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    const auto g = testing::random_hypergraph(n, rng);
    EXPECT_EQ(build_state(g), SignState::from_boolean(boolean_from_hypergraph(g)));
  }
}

TEST(SignState, ParseAndFormat) {
  const auto s = SignState::parse("++-+");
  EXPECT_EQ(s.qubits(), 2);
  EXPECT_EQ(s.signs(), (std::vector<int>{1, 1, -1, 1}));
  EXPECT_EQ(s.to_compact_string(), "++-+");
  EXPECT_EQ(s.to_lines(), "1\n1\n-1\n1\n");
  EXPECT_THROW(SignState::parse("+-+"), std::invalid_argument);
  EXPECT_THROW(SignState::parse("+x"), std::invalid_argument);
  const int bad[] = {1, 0};
  EXPECT_THROW(SignState::from_signs(bad), std::invalid_argument);
}

TEST(SignState, NormalizedAmplitudes) {
  std::mt19937_64 rng(5);
  const auto s = build_state(testing::random_hypergraph(9, rng));
  double norm = 0.0;
  for (double a : s.amplitudes()) norm += a * a;
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(EdgeOperator, Examples) {
  const auto plus = SignState::all_plus(2);
  const auto cz = apply_edge_operator(plus, VertexSet::from_vertices(std::vector<int>{0, 1}, 2));
  EXPECT_EQ(cz.signs(), (std::vector<int>{1, 1, 1, -1}));
  const auto z0 = apply_edge_operator(plus, VertexSet::from_vertices(std::vector<int>{0}, 2));
  EXPECT_EQ(z0.signs(), (std::vector<int>{1, 1, -1, -1}));
  EXPECT_THROW(apply_edge_operator(plus, VertexSet(0, 2)), std::invalid_argument);
  EXPECT_THROW(apply_edge_operator(plus, VertexSet(0b100, 3)), std::invalid_argument);
}

TEST(EdgeOperator, InvolutionAndCommutation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const auto s = build_state(testing::random_hypergraph(n, rng));
    std::uniform_int_distribution<Mask> pick(1, full_mask(n));
    const VertexSet a(pick(rng), n);
    const VertexSet b(pick(rng), n);
    EXPECT_EQ(apply_edge_operator(apply_edge_operator(s, a), a), s);
    EXPECT_EQ(apply_edge_operator(apply_edge_operator(s, a), b),
              apply_edge_operator(apply_edge_operator(s, b), a));
  }
}

TEST(PermutationFromCut, Examples) {
  EXPECT_EQ(permutation_from_cut(CutSet({2}, 3)).mapping(), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(permutation_from_cut(CutSet({1, 3}, 4)).mapping(), (std::vector<int>{2, 0, 3, 1}));
  EXPECT_EQ(permutation_from_cut(CutSet::leading(2, 5)), Permutation::identity(5));
}

TEST(PermutationFromCut, MovesCutToFront) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& cut : testing::all_cuts(n)) {
      const auto p = permutation_from_cut(cut);
      const auto& idx = cut.indices();
      for (std::size_t r = 0; r < idx.size(); ++r) EXPECT_EQ(p.target(idx[r]), static_cast<int>(r));
    }
  }
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::transposition(3, 0, 3), std::invalid_argument);
}

TEST(Permutation, GroupActionLaws) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 8;
    std::vector<int> m1(n), m2(n);
    for (int v = 0; v < n; ++v) m1[v] = m2[v] = v;
    std::shuffle(m1.begin(), m1.end(), rng);
    std::shuffle(m2.begin(), m2.end(), rng);
    const Permutation p(m1), q(m2);
    const auto s = build_state(testing::random_hypergraph(n, rng));
    EXPECT_EQ(apply_permutation(s, Permutation::identity(n)), s);
    EXPECT_EQ(apply_permutation(apply_permutation(s, q), p), apply_permutation(s, p.after(q)));
    EXPECT_EQ(apply_permutation(apply_permutation(s, p), p.inverse()), s);
    EXPECT_EQ(p.after(p.inverse()), Permutation::identity(n));
  }
}

TEST(Permutation, RelabelsHypergraph) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<int> m(n);
    for (int v = 0; v < n; ++v) m[v] = v;
    std::shuffle(m.begin(), m.end(), rng);
    const Permutation p(m);
    const auto g = testing::random_hypergraph(n, rng);
    std::vector<std::vector<int>> relabelled;
    for (auto e : g.edge_lists()) {
      for (int& v : e) v = p.target(v);
      relabelled.push_back(e);
    }
    EXPECT_EQ(apply_permutation(build_state(g), p), build_state(Hypergraph(n, relabelled)));
  }
}

TEST(IsPermutationInvariant, Examples) {
  EXPECT_TRUE(is_permutation_invariant(complete_k_graph(4, 2)));
  EXPECT_TRUE(is_permutation_invariant(Hypergraph(5, {{0, 1, 2, 3, 4}})));
  EXPECT_TRUE(is_permutation_invariant(Hypergraph(3)));
  EXPECT_FALSE(is_permutation_invariant(Hypergraph(3, {{0, 1}})));
  const int ks[] = {1, 3};
  EXPECT_TRUE(is_permutation_invariant(union_of_complete_graphs(5, ks)));
}

TEST(IsPermutationInvariant, ExactlyUnionsOfCompleteGraphs) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << ((1u << n) - 1);
    for (std::uint64_t s = 0; s < subsets; ++s) {
      const auto g = testing::hypergraph_from_subset(n, s);
      ASSERT_EQ(is_permutation_invariant(g), is_union_of_complete_graphs(g)) << to_json(g);
    }
  }
}

TEST(DensityMatrix, TraceSymmetryRankOne) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 7; ++n) {
    const auto s = build_state(testing::random_hypergraph(n, rng));
    const DensityMatrix rho(s);
    const auto& m = rho.matrix();
    EXPECT_NEAR(m.trace(), 1.0, 1e-12);
    EXPECT_TRUE(m.is_symmetric());
    // rho^2 = rho for a pure state, which checks rank one and trace one.
    const std::size_t d = m.order();
    for (std::size_t i = 0; i < d; i += 3) {
      for (std::size_t j = 0; j < d; j += 5) {
        double acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += m(i, k) * m(k, j);
        EXPECT_NEAR(acc, m(i, j), 1e-12);
      }
    }
    EXPECT_DOUBLE_EQ(rho(0, d - 1), s.sign(0) * s.sign(d - 1) / static_cast<double>(d));
  }
}

TEST(DensityMatrix, RespectsQubitCap) {
  EXPECT_THROW(DensityMatrix(SignState::all_plus(6), DenseLimits{5}), std::domain_error);
  EXPECT_NO_THROW(DensityMatrix(SignState::all_plus(5), DenseLimits{5}));
}

}  // namespace
}  // namespace hgs
