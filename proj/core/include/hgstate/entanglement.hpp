#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgstate/hypergraph.hpp"
#include "hgstate/linalg.hpp"
#include "hgstate/state.hpp"

namespace hgs {

// Eigenvalues of a trace-one partial transpose with magnitude at or below
// this are treated as zero when summing negatives.
inline constexpr double kEigenvalueZeroTolerance = 1e-12;

// Threshold above which E_NPT certifies entanglement.
inline constexpr double kNegativityThreshold = 1e-9;

/// Partial transpose over the qubits in T: entry (i, j) moves to the position
/// obtained by swapping the T-indexed bits between i and j.
SymmetricMatrix partial_transpose(const SymmetricMatrix& rho, const CutSet& cut);
SymmetricMatrix partial_transpose(const DensityMatrix& rho, const CutSet& cut);

struct SchmidtProfile {
  CutSet cut;
  std::vector<double> coefficients;  // nonzero only, nonincreasing, squares sum to 1
};

struct SchmidtLimits {
  // Cap on 2^min(|T|, n - |T|), the Gram matrix order.
  std::size_t max_gram_order = std::size_t{1} << 12;
};

/// Schmidt coefficients across T from the Gram matrix of the reshaped
/// 2^|T| x 2^(n-|T|) amplitude array (smaller side).
SchmidtProfile schmidt_profile(const SignState& state, const CutSet& cut,
                               const SchmidtLimits& limits = {});

/// PT spectrum of a pure state: {s_i^2} and {+s_i s_j, -s_i s_j : i < j}, sorted
/// descending. The 2^n - k^2 structural zeros are not included.
std::vector<double> pure_state_pt_spectrum(const std::vector<double>& coefficients);

enum class Method { dense, schmidt };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view text);

struct SpectrumReport {
  CutSet cut;
  int qubits;
  std::vector<double> eigenvalues;  // of the normalized partial transpose, descending
  double e_npt = 0.0;               // negated sum of negative eigenvalues
  double e_npt_paper_scaled = 0.0;  // 2^n * e_npt
  Method method = Method::dense;

  std::vector<double> scaled_eigenvalues() const;  // eigenvalues of 2^n * rho^T
  std::string to_json(bool paper_scale = false) const;
};

struct NumericLimits {
  DenseLimits dense;
  SchmidtLimits schmidt;
  JacobiOptions jacobi;
};

/// E_NPT across T. Dense: Jacobi eigenvalues of rho^T. Schmidt: the pure-state
/// spectrum rebuilt from Schmidt coefficients.
SpectrumReport negativity(const SignState& state, const CutSet& cut, Method method,
                          const NumericLimits& limits = {});

/// Negated sum of eigenvalues below -kEigenvalueZeroTolerance.
double negated_negative_sum(const std::vector<double>& eigenvalues);

/// Whether some hyperedge meets both T and its complement.
bool is_entangled_across_cut(const Hypergraph& g, const CutSet& cut);

/// Which of the four order-three +/-1 patterns with unit diagonal and
/// negative determinant the rows {i, j, k} of A carry (1-based), if any.
std::optional<int> order_three_pattern(const SymmetricMatrix& a, std::size_t i, std::size_t j,
                                       std::size_t k);

/// Principal index set (size 3 or 4, ascending) with negative minor, or
/// nullopt when A is positive semidefinite. A must be c * (+/-1 matrix) with
/// the diagonal equal to +c.
std::optional<std::vector<std::size_t>> sylvester_witness(const SymmetricMatrix& a,
                                                          const JacobiOptions& opts = {});

struct EqualSpectraReport {
  int qubits = 0;
  int cut_length = 0;
  bool equal = true;
  std::size_t cuts_checked = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  double e_npt_paper_scaled_min = 0.0;
  double e_npt_paper_scaled_max = 0.0;
  Method method = Method::schmidt;
  std::vector<CutSet> cuts;

  std::string to_json() const;
};

struct EqualSpectraOptions {
  Method method = Method::schmidt;
  std::uint64_t exhaustive_cap = 512;
  std::size_t sample_count = 64;
  std::uint64_t seed = 0x5eedULL;
  double tolerance = 1e-8;
  NumericLimits limits;
};

/// Compares the sorted PT spectra over every cut of length m (or a seeded
/// sample when C(n, m) exceeds the cap).
EqualSpectraReport spectra_equal_across_cuts(const Hypergraph& g, int cut_length,
                                             const EqualSpectraOptions& opts = {});

struct ProfileRow {
  int cut_length;
  double e_npt_paper_scaled;
  double e_npt;
  Method method;
};

/// E_NPT over the leading cut {0, ..., m-1} for m = 1 .. floor(n/2).
std::vector<ProfileRow> entanglement_profile(const Hypergraph& g, Method method,
                                             const NumericLimits& limits = {});

/// Dense up to max_dense_qubits, Schmidt above.
Method default_method(int qubits, int max_dense_qubits = 10) noexcept;

}  // namespace hgs
