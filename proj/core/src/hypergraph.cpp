#include "hgstate/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hgs {

namespace {

Mask mask_of(std::span<const int> vertices, int n, bool reject_duplicates) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("vertex label " + std::to_string(v) +
                                  " out of range for n = " + std::to_string(n));
    }
    const Mask b = vertex_bit(v, n);
    if (reject_duplicates && (m & b)) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
    }
    m |= b;
  }
  return m;
}

std::string describe(Mask e, int n) {
  std::string s = "(";
  bool first = true;
  for (int v : VertexSet(e, n).members()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

VertexSet::VertexSet(Mask mask, int n) : mask_(mask), n_(n) {
  if (n < 0 || n > kMaxVertices || (mask & ~full_mask(n)) != 0) {
    throw std::invalid_argument("vertex mask does not fit in width " + std::to_string(n));
  }
}

VertexSet VertexSet::from_vertices(std::span<const int> vertices, int n) {
  return VertexSet(mask_of(vertices, n, false), n);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v = 0; v < n_; ++v) {
    if (mask_ & vertex_bit(v, n_)) out.push_back(v);
  }
  return out;
}

bool canonical_less(Mask a, Mask b, int /*n*/) noexcept {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  // Equal cardinality: the lexicographically smaller list owns the smallest
  // vertex of the symmetric difference, which is its highest set bit.
  return a > b;
}

Hypergraph::Hypergraph(int n) : n_(n) { check_width(n); }

Hypergraph::Hypergraph(int n, const std::vector<std::vector<int>>& edges,
                       EmptyEdgePolicy policy)
    : n_(n) {
  check_width(n);
  std::vector<Mask> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) masks.push_back(mask_of(e, n, true));
  *this = from_masks(n, std::move(masks), policy);
}

Hypergraph Hypergraph::from_masks(int n, std::vector<Mask> edges, EmptyEdgePolicy policy) {
  Hypergraph g(n);
  const Mask full = full_mask(n);
  std::vector<Mask> kept;
  kept.reserve(edges.size());
  for (Mask e : edges) {
    if (e & ~full) throw std::invalid_argument("edge has a vertex label >= n");
    if (e == 0) {
      if (policy == EmptyEdgePolicy::reject) {
        throw std::invalid_argument("empty hyperedge is not allowed");
      }
      continue;
    }
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(),
            [n](Mask a, Mask b) { return canonical_less(a, b, n); });
  auto dup = std::adjacent_find(kept.begin(), kept.end());
  if (dup != kept.end()) {
    throw std::invalid_argument("duplicate hyperedge " + describe(*dup, n));
  }
  g.edges_ = std::move(kept);
  return g;
}

bool Hypergraph::has_edge(Mask e) const noexcept {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<VertexSet> Hypergraph::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (Mask e : edges_) out.emplace_back(e, n_);
  return out;
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (Mask e : edges_) out.push_back(VertexSet(e, n_).members());
  return out;
}

CutSet::CutSet(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("a cut needs 2 <= n <= " + std::to_string(kMaxVertices));
  }
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("cut set has a repeated index");
  }
  if (indices_.empty() || static_cast<int>(indices_.size()) >= n) {
    throw std::invalid_argument("cut set must be a nonempty proper subset of the qubits");
  }
  mask_ = mask_of(indices_, n, true);
}

CutSet CutSet::leading(int m, int n) {
  std::vector<int> idx(static_cast<std::size_t>(std::max(m, 0)));
  for (int k = 0; k < m; ++k) idx[k] = k;
  return CutSet(std::move(idx), n);
}

CutSet CutSet::complement() const {
  return CutSet(VertexSet(complement_mask(), n_).members(), n_);
}

Hypergraph parse_hypergraph(std::string_view text, EmptyEdgePolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed hypergraph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("hypergraph JSON needs an object with \"n\" and \"edges\"");
  }
  const auto& jn = doc["n"];
  if (!jn.is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  const auto n64 = jn.get<std::int64_t>();
  if (n64 < 1 || n64 > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n64) + " outside [1, " +
                                std::to_string(kMaxVertices) + "]");
  }
  const int n = static_cast<int>(n64);
  const auto& je = doc["edges"];
  if (!je.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  std::vector<std::vector<int>> edges;
  edges.reserve(je.size());
  for (const auto& edge : je) {
    if (!edge.is_array()) throw std::invalid_argument("each edge must be an array");
    std::vector<int> e;
    for (const auto& v : edge) {
      if (!v.is_number_integer()) throw std::invalid_argument("vertex labels must be integers");
      const auto label = v.get<std::int64_t>();
      if (label < 0 || label >= n) {
        throw std::invalid_argument("vertex label " + std::to_string(label) +
                                    " out of range for n = " + std::to_string(n));
      }
      e.push_back(static_cast<int>(label));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, edges, policy);
}

std::string to_json(const Hypergraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edge_lists()) doc["edges"].push_back(e);
  return doc.dump();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

Hypergraph complete_k_graph(int n, int k) {
  const int ks[] = {k};
  return union_of_complete_graphs(n, ks);
}

Hypergraph union_of_complete_graphs(int n, std::span<const int> ks) {
  check_width(n);
  if (ks.empty()) throw std::invalid_argument("at least one cardinality is required");
  for (std::size_t s = 0; s < ks.size(); ++s) {
    if (ks[s] < 1 || ks[s] > n) {
      throw std::invalid_argument("cardinality " + std::to_string(ks[s]) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (s > 0 && ks[s] <= ks[s - 1]) {
      throw std::invalid_argument("cardinalities must be distinct and increasing");
    }
  }
  std::vector<Mask> edges;
  for (int k : ks) {
    for (std::uint64_t i : cluster(n, k)) edges.push_back(static_cast<Mask>(i));
  }
  return Hypergraph::from_masks(n, std::move(edges));
}

VertexSet vertex_set_of_index(std::uint64_t i, int n) {
  check_width(n);
  if (i >= dimension(n)) {
    throw std::out_of_range("basis index " + std::to_string(i) + " outside [0, 2^" +
                            std::to_string(n) + ")");
  }
  return VertexSet(static_cast<Mask>(i), n);
}

std::vector<std::uint64_t> cluster(int n, int k) {
  check_width(n);
  if (k < 0 || k > n) {
    throw std::invalid_argument("cluster weight " + std::to_string(k) + " outside [0, " +
                                std::to_string(n) + "]");
  }
  std::vector<std::uint64_t> out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks the weight-k masks in increasing order.
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = dimension(n);
  while (x < limit) {
    out.push_back(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

EdgeClasses classify_edges(const Hypergraph& g, const CutSet& cut) {
  if (g.vertex_count() != cut.width()) {
    throw std::invalid_argument("cut width does not match the hypergraph");
  }
  EdgeClasses out;
  const Mask t = cut.mask();
  const Mask tc = cut.complement_mask();
  for (Mask e : g.edge_masks()) {
    if ((e & tc) == 0) {
      out.inside.push_back(e);
    } else if ((e & t) == 0) {
      out.outside.push_back(e);
    } else {
      out.crossing.push_back(e);
    }
  }
  return out;
}

bool is_union_of_complete_graphs(const Hypergraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> per_size(n + 1, 0);
  for (Mask e : g.edge_masks()) ++per_size[weight(e)];
  for (int c = 1; c <= n; ++c) {
    if (per_size[c] != 0 && per_size[c] != binomial(n, c)) return false;
  }
  return true;
}

}  // namespace hgs
