#include <algorithm>
#include <bit>
#include <set>

#include <gtest/gtest.h>

#include "hgstate/hypergraph.hpp"
#include "test_support.hpp"

namespace hgs {
namespace {

// Number of weight-k masks of width n, by enumeration.
std::size_t count_weight(int n, int k) {
  std::size_t c = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    if (std::popcount(i) == k) ++c;
  }
  return c;
}

TEST(ParseHypergraph, DensityExample) {
  const auto g = parse_hypergraph(R"({"n":4,"edges":[[1],[0,2],[1,3],[0,1,2]]})");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.edge_lists(), (std::vector<std::vector<int>>{{1}, {0, 2}, {1, 3}, {0, 1, 2}}));
}

TEST(ParseHypergraph, EmptyEdgeSet) {
  const auto g = parse_hypergraph(R"({"n":3,"edges":[]})");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_TRUE(g.empty());
}

TEST(ParseHypergraph, Errors) {
  EXPECT_THROW(parse_hypergraph(R"({"n":2,"edges":[[0,2]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":2,"edges":[[0,1],[1,0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":2,"edges":[[]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":0,"edges":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":25,"edges":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":3,"edges":[[0,0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":3,"edges":[[-1]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":3})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph(R"({"n":3,"edges":[[0.5]]})"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph("not json"), std::invalid_argument);
}

TEST(ParseHypergraph, EmptyEdgeAsIdentity) {
  const auto g = parse_hypergraph(R"({"n":2,"edges":[[],[0,1]]})", EmptyEdgePolicy::drop_as_identity);
  EXPECT_EQ(g.edge_lists(), (std::vector<std::vector<int>>{{0, 1}}));
}

TEST(ParseHypergraph, CanonicalEmission) {
  const auto g = parse_hypergraph(R"({"n":3,"edges":[[2,1],[0,1,2],[0]]})");
  EXPECT_EQ(to_json(g), R"({"n":3,"edges":[[0],[1,2],[0,1,2]]})");
  EXPECT_EQ(parse_hypergraph(to_json(g)), g);
}

TEST(CompleteKGraph, Triangle) {
  EXPECT_EQ(complete_k_graph(3, 2).edge_lists(),
            (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(CompleteKGraph, FullEdgeAndCounts) {
  const auto full = complete_k_graph(4, 4);
  EXPECT_EQ(full, Hypergraph(4, {{0, 1, 2, 3}}));
  EXPECT_EQ(complete_k_graph(5, 3).edge_count(), count_weight(5, 3));
  EXPECT_EQ(count_weight(5, 3), 10u);
  EXPECT_THROW(complete_k_graph(4, 0), std::invalid_argument);
  EXPECT_THROW(complete_k_graph(4, 5), std::invalid_argument);
}

TEST(UnionOfCompleteGraphs, Counts) {
  const int a[] = {2, 3};
  EXPECT_EQ(union_of_complete_graphs(3, a).edge_count(), count_weight(3, 2) + count_weight(3, 3));
  EXPECT_EQ(union_of_complete_graphs(3, a).edge_count(), 4u);
  const int b[] = {4};
  EXPECT_EQ(union_of_complete_graphs(4, b), complete_k_graph(4, 4));
  const int c[] = {1, 2};
  EXPECT_EQ(union_of_complete_graphs(4, c).edge_count(), 10u);
  const int dup[] = {2, 2};
  EXPECT_THROW(union_of_complete_graphs(4, dup), std::invalid_argument);
  const int desc[] = {3, 2};
  EXPECT_THROW(union_of_complete_graphs(4, desc), std::invalid_argument);
}

TEST(VertexSetOfIndex, Examples) {
  EXPECT_TRUE(vertex_set_of_index(0, 4).empty());
  EXPECT_EQ(vertex_set_of_index(15, 4).members(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(vertex_set_of_index(14, 4).members(), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(vertex_set_of_index(16, 4), std::out_of_range);
}

TEST(VertexSetOfIndex, RoundTripsEdgeEncoding) {
  for (int n = 1; n <= 6; ++n) {
    for (Mask i = 0; i < (Mask{1} << n); ++i) {
      const auto members = vertex_set_of_index(i, n).members();
      EXPECT_EQ(VertexSet::from_vertices(members, n).mask(), i);
    }
  }
}

TEST(Cluster, Examples) {
  EXPECT_EQ(cluster(4, 2), (std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12}));
  EXPECT_EQ(cluster(4, 0), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(cluster(5, 3).size(), 10u);
  EXPECT_THROW(cluster(4, 5), std::invalid_argument);
}

TEST(Cluster, PartitionsTheLattice) {
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> seen(std::size_t{1} << n, 0);
    for (int k = 0; k <= n; ++k) {
      const auto c = cluster(n, k);
      EXPECT_EQ(c.size(), count_weight(n, k));
      EXPECT_EQ(c.size(), binomial(n, k));
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      for (auto i : c) ++seen[i];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST(ClassifyEdges, Examples) {
  const Hypergraph cz(2, {{0, 1}});
  const auto a = classify_edges(cz, CutSet({0}, 2));
  EXPECT_TRUE(a.inside.empty());
  EXPECT_TRUE(a.outside.empty());
  EXPECT_EQ(a.crossing, (std::vector<Mask>{0b11}));

  const Hypergraph g(4, {{1}, {0, 2}, {1, 3}, {0, 1, 2}});
  const auto b = classify_edges(g, CutSet({0, 2}, 4));
  auto lists = [](const std::vector<Mask>& es) {
    std::set<std::vector<int>> out;
    for (Mask e : es) out.insert(VertexSet(e, 4).members());
    return out;
  };
  EXPECT_EQ(lists(b.inside), (std::set<std::vector<int>>{{0, 2}}));
  // (1,3) lies inside the complement {1,3}, so it does not cross.
  EXPECT_EQ(lists(b.outside), (std::set<std::vector<int>>{{1}, {1, 3}}));
  EXPECT_EQ(lists(b.crossing), (std::set<std::vector<int>>{{0, 1, 2}}));

  const auto c = classify_edges(Hypergraph(3), CutSet({1}, 3));
  EXPECT_TRUE(c.inside.empty() && c.outside.empty() && c.crossing.empty());
}

TEST(ClassifyEdges, IsAPartition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(trial % 6);
    const auto g = testing::random_hypergraph(n, rng);
    for (const auto& cut : testing::all_cuts(n)) {
      const auto cls = classify_edges(g, cut);
      std::vector<Mask> all;
      all.insert(all.end(), cls.inside.begin(), cls.inside.end());
      all.insert(all.end(), cls.outside.begin(), cls.outside.end());
      all.insert(all.end(), cls.crossing.begin(), cls.crossing.end());
      std::sort(all.begin(), all.end());
      auto expected = g.edge_masks();
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(all, expected);
    }
  }
}

TEST(CutSet, Validation) {
  EXPECT_EQ(CutSet({3, 0}, 4).indices(), (std::vector<int>{0, 3}));
  EXPECT_THROW(CutSet({}, 4), std::invalid_argument);
  EXPECT_THROW(CutSet({0, 1, 2, 3}, 4), std::invalid_argument);
  EXPECT_THROW(CutSet({4}, 4), std::invalid_argument);
  EXPECT_THROW(CutSet({1, 1}, 4), std::invalid_argument);
  EXPECT_EQ(CutSet({0, 3}, 4).complement(), CutSet({1, 2}, 4));
}

}  // namespace
}  // namespace hgs
