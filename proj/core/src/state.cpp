#include "hgstate/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgs {

SignState::SignState(int n) : n_(n) {
  check_width(n);
  words_.assign((dimension(n) + 63) / 64, 0);
}

SignState SignState::all_plus(int n) { return SignState(n); }

SignState SignState::from_signs(std::span<const int> signs) {
  const auto len = signs.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("sign vector length " + std::to_string(len) + " is not 2^n");
  }
  SignState s(std::countr_zero(len));
  for (std::size_t i = 0; i < len; ++i) {
    if (signs[i] == -1) {
      s.flip(i);
    } else if (signs[i] != 1) {
      throw std::invalid_argument("sign entries must be +1 or -1");
    }
  }
  return s;
}

SignState SignState::from_boolean(const BooleanTable& f) {
  SignState s(f.arity());
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (f[i]) s.flip(i);
  }
  return s;
}

SignState SignState::parse(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw std::invalid_argument(std::string("sign character '") + c + "' is not + or -");
    }
  }
  return from_signs(signs);
}

double SignState::amplitude(std::uint64_t i) const noexcept {
  return sign(i) / std::sqrt(static_cast<double>(size()));
}

void SignState::flip_edge(Mask e) noexcept {
  const Mask free = full_mask(n_) & ~e;
  Mask s = free;
  while (true) {
    flip(e | s);
    if (s == 0) break;
    s = (s - 1) & free;
  }
}

std::vector<int> SignState::signs() const {
  std::vector<int> out(size());
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = sign(i);
  return out;
}

std::vector<double> SignState::amplitudes() const {
  std::vector<double> out(size());
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = amplitude(i);
  return out;
}

std::string SignState::to_compact_string() const {
  std::string s(size(), '+');
  for (std::uint64_t i = 0; i < size(); ++i) {
    if (negative(i)) s[i] = '-';
  }
  return s;
}

std::string SignState::to_lines() const {
  std::string s;
  s.reserve(size() * 3);
  for (std::uint64_t i = 0; i < size(); ++i) s += negative(i) ? "-1\n" : "1\n";
  return s;
}

SignState apply_edge_operator(const SignState& state, const VertexSet& e) {
  if (e.width() != state.qubits()) {
    throw std::invalid_argument("edge width does not match the state");
  }
  if (e.empty()) throw std::invalid_argument("empty hyperedge is not allowed");
  SignState out = state;
  out.flip_edge(e.mask());
  return out;
}

SignState build_state(const Hypergraph& g) {
  SignState s = SignState::all_plus(g.vertex_count());
  for (Mask e : g.edge_masks()) s.flip_edge(e);
  return s;
}

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int t : mapping_) {
    if (t < 0 || t >= n || seen[t]) throw std::invalid_argument("mapping is not a bijection");
    seen[t] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto m = identity(n).mapping_;
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("position out of range");
  std::swap(m[a], m[b]);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (int i = 0; i < size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> m(mapping_.size());
  for (int i = 0; i < size(); ++i) m[i] = mapping_[other.mapping_[i]];
  return Permutation(std::move(m));
}

std::uint64_t Permutation::act_on_index(std::uint64_t i) const noexcept {
  const int n = size();
  std::uint64_t out = 0;
  for (int v = 0; v < n; ++v) {
    if (i & vertex_bit(v, n)) out |= vertex_bit(mapping_[v], n);
  }
  return out;
}

Permutation permutation_from_cut(const CutSet& cut) {
  const int n = cut.width();
  std::vector<int> m(n, -1);
  int next = 0;
  for (int k : cut.indices()) m[k] = next++;
  for (int v = 0; v < n; ++v) {
    if (m[v] < 0) m[v] = next++;
  }
  return Permutation(std::move(m));
}

SignState apply_permutation(const SignState& state, const Permutation& p) {
  if (p.size() != state.qubits()) {
    throw std::invalid_argument("permutation acts on " + std::to_string(p.size()) +
                                " qubits, state has " + std::to_string(state.qubits()));
  }
  SignState out = SignState::all_plus(state.qubits());
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if (state.negative(i)) out.flip(p.act_on_index(i));
  }
  return out;
}

bool is_permutation_invariant(const Hypergraph& g) {
  const int n = g.vertex_count();
  const SignState s = build_state(g);
  for (int a = 0; a + 1 < n; ++a) {
    if (!(apply_permutation(s, Permutation::transposition(n, a, a + 1)) == s)) return false;
  }
  return true;
}

DensityMatrix::DensityMatrix(const SignState& state, const DenseLimits& limits)
    : n_(state.qubits()) {
  if (n_ > limits.max_qubits) {
    throw std::domain_error("dense density matrix for " + std::to_string(n_) +
                            " qubits exceeds the cap of " + std::to_string(limits.max_qubits));
  }
  const std::size_t d = state.size();
  const double scale = 1.0 / static_cast<double>(d);
  m_ = SymmetricMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      m_.set(i, j, state.negative(i) == state.negative(j) ? scale : -scale);
    }
  }
}

}  // namespace hgs
