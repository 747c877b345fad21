#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgs {

// Bitmask over qubit/vertex positions. Vertex 0 is the most significant of the
// n low bits, so the mask of O(i) is the basis index i itself.
using Mask = std::uint32_t;

// Widest hypergraph the combinatorial layer accepts.
inline constexpr int kMaxVertices = 24;

constexpr Mask vertex_bit(int vertex, int n) noexcept {
  return Mask{1} << (n - 1 - vertex);
}

constexpr Mask full_mask(int n) noexcept {
  return n == 0 ? Mask{0} : (Mask{1} << n) - 1;
}

constexpr std::uint64_t dimension(int n) noexcept {
  return std::uint64_t{1} << n;
}

constexpr int weight(Mask m) noexcept { return std::popcount(m); }

inline void check_width(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace hgs
