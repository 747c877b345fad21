#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgstate/boolean.hpp"
#include "hgstate/hypergraph.hpp"
#include "hgstate/linalg.hpp"

namespace hgs {

/// n-qubit real state with amplitudes sign[i] / sqrt(2^n). Signs are packed one
/// bit per basis index (set bit = negative amplitude).
class SignState {
 public:
  static SignState all_plus(int n);
  static SignState from_signs(std::span<const int> signs);
  static SignState from_boolean(const BooleanTable& f);
  /// Accepts a compact string of '+'/'-' characters.
  static SignState parse(std::string_view text);

  int qubits() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return dimension(n_); }
  bool negative(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  int sign(std::uint64_t i) const noexcept { return negative(i) ? -1 : 1; }
  double amplitude(std::uint64_t i) const noexcept;

  /// Negates every amplitude whose basis index covers the edge.
  void flip_edge(Mask e) noexcept;
  void flip(std::uint64_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::vector<int> signs() const;
  std::vector<double> amplitudes() const;
  /// Packed sign bits, 64 basis indices per word.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_compact_string() const;  // "++-+..."
  std::string to_lines() const;           // "1\n-1\n..."

  friend bool operator==(const SignState&, const SignState&) = default;

 private:
  explicit SignState(int n);
  int n_;
  std::vector<std::uint64_t> words_;
};

/// Z_e applied to a state: negates amplitude i exactly when e is a subset of
/// O(i). Involutive.
SignState apply_edge_operator(const SignState& state, const VertexSet& e);

/// |G> = prod_e Z_e |+>^n.
SignState build_state(const Hypergraph& g);

/// Bijection on qubit positions: position `from` moves to target(from).
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(mapping_.size()); }
  int target(int from) const noexcept { return mapping_[from]; }
  const std::vector<int>& mapping() const noexcept { return mapping_; }

  Permutation inverse() const;
  /// (this * other)(x) = this(other(x)); `other` acts first.
  Permutation after(const Permutation& other) const;

  /// Image of basis index i: bit at position v moves to position target(v).
  std::uint64_t act_on_index(std::uint64_t i) const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> mapping_;
};

/// Sends k_0, ..., k_{m-1} to 0, ..., m-1 and fills m..n-1 with the remaining
/// positions in ascending order.
Permutation permutation_from_cut(const CutSet& cut);

/// signs'[pi(i)] = signs[i] where pi moves the bits of i per the permutation.
SignState apply_permutation(const SignState& state, const Permutation& p);

/// Invariance of |G> under every adjacent transposition of qubits.
bool is_permutation_invariant(const Hypergraph& g);

struct DenseLimits {
  int max_qubits = 13;
};

/// rho = |G><G|, rho_ij = sign_i * sign_j / 2^n.
class DensityMatrix {
 public:
  explicit DensityMatrix(const SignState& state, const DenseLimits& limits = {});

  int qubits() const noexcept { return n_; }
  const SymmetricMatrix& matrix() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  int n_;
  SymmetricMatrix m_;
};

inline DensityMatrix density_matrix(const SignState& state, const DenseLimits& limits = {}) {
  return DensityMatrix(state, limits);
}

}  // namespace hgs
