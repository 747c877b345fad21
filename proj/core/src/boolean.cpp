#include "hgstate/boolean.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgs {

BooleanTable::BooleanTable(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  check_width(n);
  if (bits_.size() != dimension(n)) {
    throw std::invalid_argument("truth table needs 2^" + std::to_string(n) + " entries, got " +
                                std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }
}

BooleanTable BooleanTable::zeros(int n) {
  check_width(n);
  return BooleanTable(n, std::vector<std::uint8_t>(dimension(n), 0));
}

BooleanTable BooleanTable::from_string(std::string_view text, std::optional<int> n) {
  int arity = 0;
  if (n) {
    arity = *n;
    check_width(arity);
  } else {
    const auto len = text.size();
    if (len < 2 || (len & (len - 1)) != 0) {
      throw std::invalid_argument("truth table length " + std::to_string(len) +
                                  " is not 2^n for n >= 1");
    }
    arity = std::countr_zero(len);
  }
  if (text.size() != dimension(arity)) {
    throw std::invalid_argument("truth table has " + std::to_string(text.size()) +
                                " characters, expected 2^" + std::to_string(arity));
  }
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument(std::string("truth table character '") + text[i] +
                                  "' is not 0 or 1");
    }
    bits[i] = text[i] == '1';
  }
  return BooleanTable(arity, std::move(bits));
}

std::uint64_t BooleanTable::count_ones() const noexcept {
  return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BooleanTable::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

BooleanTable boolean_from_hypergraph(const Hypergraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> bits(dimension(n), 0);
  const Mask full = full_mask(n);
  for (Mask e : g.edge_masks()) {
    // Walk every i with e subset of O(i): e | s for each subset s of the rest.
    const Mask free = full & ~e;
    Mask s = free;
    while (true) {
      bits[e | s] ^= 1;
      if (s == 0) break;
      s = (s - 1) & free;
    }
  }
  return BooleanTable(n, std::move(bits));
}

IncidenceMatrix::IncidenceMatrix(const Hypergraph& g)
    : rows_(g.vertex_count()), cols_(static_cast<int>(g.edge_count())) {
  entries_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
  const auto& edges = g.edge_masks();
  for (int c = 0; c < cols_; ++c) {
    for (int v = 0; v < rows_; ++v) {
      if (edges[c] & vertex_bit(v, rows_)) entries_[static_cast<std::size_t>(v) * cols_ + c] = 1;
    }
  }
}

std::vector<int> IncidenceMatrix::transpose_times(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != rows_) {
    throw std::invalid_argument("vector length does not match the vertex count");
  }
  std::vector<int> y(cols_, 0);
  for (int c = 0; c < cols_; ++c) {
    for (int v = 0; v < rows_; ++v) y[c] += (*this)(v, c) * x[v];
  }
  return y;
}

std::vector<int> IncidenceMatrix::column_sums() const {
  std::vector<int> ones(rows_, 1);
  return transpose_times(ones);
}

bool boolean_via_incidence(const Hypergraph& g, std::uint64_t i) {
  const int n = g.vertex_count();
  if (i >= dimension(n)) {
    throw std::out_of_range("basis index " + std::to_string(i) + " outside [0, 2^" +
                            std::to_string(n) + ")");
  }
  const IncidenceMatrix m(g);
  std::vector<int> residual(n);
  for (int v = 0; v < n; ++v) residual[v] = 1 - ((i & vertex_bit(v, n)) ? 1 : 0);
  const auto y = m.transpose_times(residual);
  const auto zeros = std::count(y.begin(), y.end(), 0);
  return (zeros & 1) != 0;
}

Hypergraph hypergraph_from_boolean(const BooleanTable& f) {
  if (f[0]) {
    throw std::domain_error(
        "f(0...0) = 1: every hypergraph state has amplitude +1/sqrt(2^n) on |0...0>, so this "
        "table matches a hypergraph state only up to a global phase of -1");
  }
  const int n = f.arity();
  std::vector<std::uint8_t> coeff = f.bits();
  // In-place subset-lattice butterfly over GF(2).
  const std::uint64_t size = coeff.size();
  for (std::uint64_t bit = 1; bit < size; bit <<= 1) {
    for (std::uint64_t i = 0; i < size; ++i) {
      if (i & bit) coeff[i] ^= coeff[i ^ bit];
    }
  }
  std::vector<Mask> edges;
  for (std::uint64_t i = 1; i < size; ++i) {
    if (coeff[i]) edges.push_back(static_cast<Mask>(i));
  }
  return Hypergraph::from_masks(n, std::move(edges));
}

bool closed_form_f(int n, std::span<const int> ks, std::uint64_t i) {
  const auto o = vertex_set_of_index(i, n);
  const int s = o.size();
  std::uint64_t total = 0;
  for (int k : ks) {
    if (k <= s) total += binomial(s, k);
  }
  return (total & 1) != 0;
}

int corank(const Hypergraph& g) {
  if (g.empty()) throw std::domain_error("co-rank is undefined for a hypergraph without edges");
  int best = g.vertex_count();
  for (Mask e : g.edge_masks()) best = std::min(best, weight(e));
  return best;
}

}  // namespace hgs
