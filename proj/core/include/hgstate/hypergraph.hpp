#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgstate/bits.hpp"

namespace hgs {

/// A subset of {0, ..., n-1} stored as an n-bit mask (vertex 0 is the MSB).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Mask mask, int n);

  static VertexSet from_vertices(std::span<const int> vertices, int n);

  Mask mask() const noexcept { return mask_; }
  int width() const noexcept { return n_; }
  int size() const noexcept { return weight(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int vertex) const noexcept {
    return vertex >= 0 && vertex < n_ && (mask_ & vertex_bit(vertex, n_)) != 0;
  }
  bool subset_of(const VertexSet& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Members in ascending order.
  std::vector<int> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Mask mask_ = 0;
  int n_ = 0;
};

/// Ordering used for canonical emission: by cardinality, then
/// lexicographically on the ascending member lists.
bool canonical_less(Mask a, Mask b, int n) noexcept;

enum class EmptyEdgePolicy {
  reject,
  drop_as_identity,  // Z_{} is the identity; the edge is accepted and dropped
};

/// Vertex count plus a set of non-empty hyperedges. Immutable; edges are kept
/// in canonical order.
class Hypergraph {
 public:
  explicit Hypergraph(int n);
  Hypergraph(int n, const std::vector<std::vector<int>>& edges,
             EmptyEdgePolicy policy = EmptyEdgePolicy::reject);

  static Hypergraph from_masks(int n, std::vector<Mask> edges,
                               EmptyEdgePolicy policy = EmptyEdgePolicy::reject);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Mask>& edge_masks() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool has_edge(Mask e) const noexcept;

  std::vector<VertexSet> edges() const;
  std::vector<std::vector<int>> edge_lists() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  std::vector<Mask> edges_;
};

/// Nonempty proper subset T of the qubit positions; stored sorted.
class CutSet {
 public:
  CutSet(std::vector<int> indices, int n);

  static CutSet leading(int m, int n);  // {0, ..., m-1}

  const std::vector<int>& indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  int width() const noexcept { return n_; }
  Mask mask() const noexcept { return mask_; }
  Mask complement_mask() const noexcept { return full_mask(n_) & ~mask_; }
  CutSet complement() const;

  friend bool operator==(const CutSet&, const CutSet&) = default;

 private:
  std::vector<int> indices_;
  int n_;
  Mask mask_;
};

/// Parses `{"n": <int>, "edges": [[v, ...], ...]}`.
Hypergraph parse_hypergraph(std::string_view text,
                            EmptyEdgePolicy policy = EmptyEdgePolicy::reject);

/// Compact canonical JSON, e.g. `{"n":3,"edges":[[0],[1,2],[0,1,2]]}`.
std::string to_json(const Hypergraph& g);

std::uint64_t binomial(int n, int k);

Hypergraph complete_k_graph(int n, int k);

/// Union of complete k-graphs for strictly increasing ks in [1, n].
Hypergraph union_of_complete_graphs(int n, std::span<const int> ks);

/// O(i): vertices whose bit is set in basis index i.
VertexSet vertex_set_of_index(std::uint64_t i, int n);

/// C_k: basis indices of Hamming weight k, ascending.
std::vector<std::uint64_t> cluster(int n, int k);

struct EdgeClasses {
  std::vector<Mask> inside;      // e within T
  std::vector<Mask> outside;     // e within the complement of T
  std::vector<Mask> crossing;    // e meets both sides
};

EdgeClasses classify_edges(const Hypergraph& g, const CutSet& cut);

/// True when E(G) is a union of complete k-graph edge sets: for every
/// cardinality either all or none of the subsets of that size are edges.
bool is_union_of_complete_graphs(const Hypergraph& g);

}  // namespace hgs
