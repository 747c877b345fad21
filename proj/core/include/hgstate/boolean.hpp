#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgstate/hypergraph.hpp"

namespace hgs {

/// Truth table of f : {0,1}^n -> {0,1}; entry i is f(bin(i)) with vertex 0 as
/// the most significant input bit.
class BooleanTable {
 public:
  BooleanTable(int n, std::vector<std::uint8_t> bits);

  static BooleanTable zeros(int n);

  /// Parses a string of 2^n characters from {0,1}, index 0 leftmost. When n
  /// is not given it is inferred from the length.
  static BooleanTable from_string(std::string_view text, std::optional<int> n = std::nullopt);

  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::uint64_t i) const noexcept { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::uint64_t count_ones() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BooleanTable&, const BooleanTable&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// f(bin(i)) = |{e in E(G) : e subset of O(i)}| mod 2, computed by flipping
/// every superset of each edge.
BooleanTable boolean_from_hypergraph(const Hypergraph& g);

/// Vertex-edge incidence matrix, n rows by |E(G)| columns.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Hypergraph& g);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int operator()(int vertex, int edge) const noexcept {
    return entries_[static_cast<std::size_t>(vertex) * cols_ + edge];
  }

  /// M^t x for an integer column vector x of length n.
  std::vector<int> transpose_times(std::span<const int> x) const;

  /// M^t j_n, i.e. the edge cardinalities.
  std::vector<int> column_sums() const;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> entries_;
};

/// f(bin(i)) as the parity of the number of zeros in M^t (j_n - bin(i)^t).
bool boolean_via_incidence(const Hypergraph& g, std::uint64_t i);

/// Inverse of boolean_from_hypergraph by the mod-2 Moebius transform over the
/// subset lattice. Throws std::domain_error when f(0...0) = 1.
Hypergraph hypergraph_from_boolean(const BooleanTable& f);

/// Closed form for unions of complete k-graphs: with s = |O(i)|,
/// returns (sum over k in ks of C(s, k)) mod 2.
bool closed_form_f(int n, std::span<const int> ks, std::uint64_t i);

/// Least edge cardinality. Throws std::domain_error on an edgeless hypergraph.
int corank(const Hypergraph& g);

}  // namespace hgs
