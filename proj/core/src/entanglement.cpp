#include "hgstate/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hgs {

namespace {

std::size_t order_to_qubits(std::size_t order) {
  if (order < 2 || (order & (order - 1)) != 0) {
    throw std::invalid_argument("matrix order " + std::to_string(order) + " is not 2^n");
  }
  return static_cast<std::size_t>(std::countr_zero(order));
}

std::vector<double> padded(std::vector<double> values, std::uint64_t total) {
  if (values.size() < total) values.resize(total, 0.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> pt_spectrum(const SignState& state, const CutSet& cut, Method method,
                                const NumericLimits& limits) {
  if (method == Method::dense) {
    const DensityMatrix rho(state, limits.dense);
    return symmetric_eigenvalues(partial_transpose(rho, cut), limits.jacobi);
  }
  const auto profile = schmidt_profile(state, cut, limits.schmidt);
  return padded(pure_state_pt_spectrum(profile.coefficients), state.size());
}

}  // namespace

SymmetricMatrix partial_transpose(const SymmetricMatrix& rho, const CutSet& cut) {
  const auto n = order_to_qubits(rho.order());
  if (static_cast<int>(n) != cut.width()) {
    throw std::invalid_argument("cut width does not match the matrix order");
  }
  const std::size_t d = rho.order();
  const std::size_t t = cut.mask();
  SymmetricMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const std::size_t ti = (i & ~t) | (j & t);
      const std::size_t tj = (j & ~t) | (i & t);
      out.set(ti, tj, rho(i, j));
    }
  }
  return out;
}

SymmetricMatrix partial_transpose(const DensityMatrix& rho, const CutSet& cut) {
  return partial_transpose(rho.matrix(), cut);
}

SchmidtProfile schmidt_profile(const SignState& state, const CutSet& cut,
                               const SchmidtLimits& limits) {
  const int n = state.qubits();
  if (cut.width() != n) throw std::invalid_argument("cut width does not match the state");
  const int m = cut.size();
  const bool rows_small = m <= n - m;
  const int small_bits = rows_small ? m : n - m;
  const int large_bits = n - small_bits;
  const std::size_t small = std::size_t{1} << small_bits;
  const std::size_t large = std::size_t{1} << large_bits;
  if (small > limits.max_gram_order) {
    throw std::domain_error("Schmidt Gram order " + std::to_string(small) + " exceeds the cap " +
                            std::to_string(limits.max_gram_order));
  }

  // After the permutation, T occupies the leading (most significant) m bits:
  // row index = top m bits, column index = the remaining n - m bits.
  const Permutation p = permutation_from_cut(cut);
  const std::size_t words = (large + 63) / 64;
  std::vector<std::uint64_t> packed(small * words, 0);
  const std::uint64_t low_mask = (std::uint64_t{1} << (n - m)) - 1;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if (!state.negative(i)) continue;
    const std::uint64_t idx = p.act_on_index(i);
    const std::uint64_t row = idx >> (n - m);
    const std::uint64_t col = idx & low_mask;
    const std::uint64_t a = rows_small ? row : col;
    const std::uint64_t b = rows_small ? col : row;
    packed[a * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  }

  // Gram entries: (#agreeing - #disagreeing signs) / 2^n, exact in binary.
  const double scale = 1.0 / static_cast<double>(state.size());
  SymmetricMatrix gram(small);
  for (std::size_t a = 0; a < small; ++a) {
    for (std::size_t b = a; b < small; ++b) {
      std::uint64_t diff = 0;
      for (std::size_t w = 0; w < words; ++w) {
        diff += std::popcount(packed[a * words + w] ^ packed[b * words + w]);
      }
      const double dot = static_cast<double>(large) - 2.0 * static_cast<double>(diff);
      gram.set(a, b, dot * scale);
    }
  }

  auto eig = symmetric_eigenvalues(gram);
  std::vector<double> coeffs;
  coeffs.reserve(eig.size());
  for (double lambda : eig) {
    if (lambda > kEigenvalueZeroTolerance) coeffs.push_back(std::sqrt(lambda));
  }
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  return SchmidtProfile{cut, std::move(coeffs)};
}

std::vector<double> pure_state_pt_spectrum(const std::vector<double>& s) {
  std::vector<double> out;
  out.reserve(s.size() * s.size());
  for (double v : s) out.push_back(v * v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      out.push_back(s[i] * s[j]);
      out.push_back(-s[i] * s[j]);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string_view to_string(Method m) noexcept {
  return m == Method::dense ? "dense" : "schmidt";
}

Method parse_method(std::string_view text) {
  if (text == "dense") return Method::dense;
  if (text == "schmidt") return Method::schmidt;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::vector<double> SpectrumReport::scaled_eigenvalues() const {
  const double f = static_cast<double>(dimension(qubits));
  std::vector<double> out(eigenvalues);
  for (double& v : out) v *= f;
  return out;
}

std::string SpectrumReport::to_json(bool paper_scale) const {
  nlohmann::ordered_json doc;
  doc["cut"] = cut.indices();
  doc["eigenvalues"] = paper_scale ? scaled_eigenvalues() : eigenvalues;
  doc["e_npt"] = e_npt;
  doc["e_npt_paper_scaled"] = e_npt_paper_scaled;
  doc["method"] = std::string(hgs::to_string(method));
  return doc.dump();
}

double negated_negative_sum(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) {
    if (v < -kEigenvalueZeroTolerance) s -= v;
  }
  return s;
}

SpectrumReport negativity(const SignState& state, const CutSet& cut, Method method,
                          const NumericLimits& limits) {
  if (cut.width() != state.qubits()) {
    throw std::invalid_argument("cut width does not match the state");
  }
  SpectrumReport r{cut, state.qubits(), {}, 0.0, 0.0, method};
  if (method == Method::dense) {
    const DensityMatrix rho(state, limits.dense);
    r.eigenvalues = symmetric_eigenvalues(partial_transpose(rho, cut), limits.jacobi);
    r.e_npt = negated_negative_sum(r.eigenvalues);
  } else {
    const auto profile = schmidt_profile(state, cut, limits.schmidt);
    const auto& s = profile.coefficients;
    r.eigenvalues = pure_state_pt_spectrum(s);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) sum += s[i] * s[j];
    }
    r.e_npt = sum;
  }
  r.e_npt_paper_scaled = r.e_npt * static_cast<double>(state.size());
  return r;
}

bool is_entangled_across_cut(const Hypergraph& g, const CutSet& cut) {
  return !classify_edges(g, cut).crossing.empty();
}

std::optional<int> order_three_pattern(const SymmetricMatrix& a, std::size_t i, std::size_t j,
                                       std::size_t k) {
  auto sgn = [&](std::size_t r, std::size_t c) { return a(r, c) < 0 ? -1 : 1; };
  if (sgn(i, i) < 0 || sgn(j, j) < 0 || sgn(k, k) < 0) return std::nullopt;
  const int ij = sgn(i, j), ik = sgn(i, k), jk = sgn(j, k);
  if (ij * ik * jk > 0) return std::nullopt;
  if (ij == 1 && ik == -1 && jk == 1) return 1;
  if (ij == -1 && ik == 1 && jk == 1) return 2;
  if (ij == 1 && ik == 1 && jk == -1) return 3;
  return 4;
}

std::optional<std::vector<std::size_t>> sylvester_witness(const SymmetricMatrix& a,
                                                          const JacobiOptions& opts) {
  const std::size_t d = a.order();
  if (d == 0) throw std::invalid_argument("empty matrix");
  const double c = a(0, 0);
  if (!(c > 0.0)) throw std::invalid_argument("diagonal entries must be positive");
  for (std::size_t i = 0; i < d; ++i) {
    if (a(i, i) != c) throw std::invalid_argument("diagonal entries must all be equal");
    for (std::size_t j = 0; j < d; ++j) {
      if (std::abs(a(i, j)) != c) {
        throw std::invalid_argument("entries must be +/- the diagonal value");
      }
    }
  }

  // A sign matrix with unit diagonal is c * x x^T (x_j = sign of row 0) unless
  // some (i, j) breaks the product rule, and then {0, i, j} carries one of the
  // four negative order-three patterns.
  auto x = [&](std::size_t j) { return a(0, j) < 0 ? -1 : 1; };
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const int s = a(i, j) < 0 ? -1 : 1;
      if (s != x(i) * x(j)) return std::vector<std::size_t>{0, i, j};
    }
  }

  const auto eig = symmetric_eigenvalues(a, opts);
  if (eig.back() >= -kEigenvalueZeroTolerance * a.frobenius_norm()) return std::nullopt;

  const double tol = kEigenvalueZeroTolerance * c * c * c * c;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      for (std::size_t r = q + 1; r < d; ++r) {
        for (std::size_t s = r + 1; s < d; ++s) {
          const std::size_t idx[] = {p, q, r, s};
          if (determinant(a.principal_submatrix(idx)) < -tol) {
            return std::vector<std::size_t>{p, q, r, s};
          }
        }
      }
    }
  }
  throw std::logic_error("matrix is not positive semidefinite but has no negative minor of order <= 4");
}

std::string EqualSpectraReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = qubits;
  doc["cut_length"] = cut_length;
  doc["equal"] = equal;
  doc["cuts_checked"] = cuts_checked;
  doc["sampled"] = sampled;
  doc["seed"] = seed;
  doc["max_deviation"] = max_deviation;
  doc["e_npt_paper_scaled_min"] = e_npt_paper_scaled_min;
  doc["e_npt_paper_scaled_max"] = e_npt_paper_scaled_max;
  doc["method"] = std::string(hgs::to_string(method));
  auto& jc = doc["cuts"] = nlohmann::ordered_json::array();
  for (const auto& c : cuts) jc.push_back(c.indices());
  return doc.dump();
}

EqualSpectraReport spectra_equal_across_cuts(const Hypergraph& g, int cut_length,
                                             const EqualSpectraOptions& opts) {
  const int n = g.vertex_count();
  if (cut_length < 1 || cut_length >= n) {
    throw std::invalid_argument("cut length " + std::to_string(cut_length) + " outside [1, " +
                                std::to_string(n - 1) + "]");
  }
  EqualSpectraReport report;
  report.qubits = n;
  report.cut_length = cut_length;
  report.method = opts.method;
  report.seed = opts.seed;

  auto masks = cluster(n, cut_length);
  if (masks.size() > opts.exhaustive_cap) {
    std::vector<std::uint64_t> chosen;
    std::mt19937_64 rng(opts.seed);
    std::sample(masks.begin(), masks.end(), std::back_inserter(chosen), opts.sample_count, rng);
    masks = std::move(chosen);
    report.sampled = true;
  }

  const SignState state = build_state(g);
  const double scale = static_cast<double>(state.size());
  std::vector<double> reference;
  for (std::uint64_t mask : masks) {
    CutSet cut(VertexSet(static_cast<Mask>(mask), n).members(), n);
    const auto spectrum = pt_spectrum(state, cut, opts.method, opts.limits);
    const double e = negated_negative_sum(spectrum) * scale;
    if (report.cuts.empty()) {
      reference = spectrum;
      report.e_npt_paper_scaled_min = report.e_npt_paper_scaled_max = e;
    } else {
      for (std::size_t k = 0; k < spectrum.size(); ++k) {
        report.max_deviation = std::max(report.max_deviation, std::abs(spectrum[k] - reference[k]));
      }
      report.e_npt_paper_scaled_min = std::min(report.e_npt_paper_scaled_min, e);
      report.e_npt_paper_scaled_max = std::max(report.e_npt_paper_scaled_max, e);
    }
    report.cuts.push_back(std::move(cut));
  }
  report.cuts_checked = report.cuts.size();
  report.equal = report.max_deviation <= opts.tolerance;
  return report;
}

std::vector<ProfileRow> entanglement_profile(const Hypergraph& g, Method method,
                                             const NumericLimits& limits) {
  const int n = g.vertex_count();
  const SignState state = build_state(g);
  std::vector<ProfileRow> rows;
  for (int m = 1; m <= n / 2; ++m) {
    const auto r = negativity(state, CutSet::leading(m, n), method, limits);
    rows.push_back({m, r.e_npt_paper_scaled, r.e_npt, method});
  }
  return rows;
}

Method default_method(int qubits, int max_dense_qubits) noexcept {
  return qubits <= max_dense_qubits ? Method::dense : Method::schmidt;
}

}  // namespace hgs
