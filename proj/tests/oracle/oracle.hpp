#pragma once

// Brute-force reference implementations for cross-checking the library.
// Nothing here includes or links hgstate code; inputs are plain containers.

#include <cstdint>
#include <vector>

namespace oracle {

struct OracleConfig {
  int max_n_exhaustive = 4;
  std::uint64_t seed = 20240611;

  void validate() const;  // max_n_exhaustive <= 6
};

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> edges;
};

/// bin(i) as n digits, first digit = vertex 0.
std::vector<int> binary_digits(std::uint64_t i, int n);

/// Parity of the number of edges e with i_v = 1 for every v in e.
int oracle_boolean(const Graph& g, std::uint64_t i);

/// (-1)^f for every basis index.
std::vector<int> oracle_signs(const Graph& g);

/// Full spectrum (descending) of the partial transpose of |psi><psi| with
/// psi = signs / sqrt(2^n), built entry by entry from digit vectors and
/// diagonalised with Eigen (tridiagonal QR, falling back to the real Schur
/// form when that fails to converge). n <= 6.
std::vector<double> oracle_pt_spectrum(const std::vector<int>& signs, const std::vector<int>& cut);

/// Rank-one test of the reshaped +/-1 amplitude array (every 2x2 minor
/// vanishes). n <= 6.
bool oracle_separable(const std::vector<int>& signs, const std::vector<int>& cut);

}  // namespace oracle
