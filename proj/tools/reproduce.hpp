#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgstate/entanglement.hpp"
#include "reference_tables.hpp"

namespace hgs::cli {

enum class Family { single_edge, complete_k };

Family parse_family(std::string_view text);
std::string_view to_string(Family f) noexcept;

/// Parses "a..b" (inclusive) or a single integer.
std::pair<int, int> parse_range(std::string_view text);

struct TableCell {
  Family family;
  int n;
  int k;
  int cut_length;
  double e_npt_paper_scaled;
  double e_npt;
  Method method;
  std::optional<tables::ReferenceCell> reference;
};

struct ReproduceOptions {
  Family family = Family::single_edge;
  int n_min = 2;
  int n_max = 8;
  std::optional<Method> method;  // unset: dense up to dense_max_qubits, Schmidt above
  int dense_max_qubits = 10;
  unsigned threads = 1;
  double tolerance = 1e-3;
};

/// One row per (n, k, cut length) in canonical order. Cells are evaluated on
/// up to `threads` workers; the result does not depend on the thread count.
std::vector<TableCell> reproduce_table(const ReproduceOptions& opts);

/// Fixed CSV columns followed by '#' comment lines comparing each cell that
/// has a reference value.
std::string format_csv(const std::vector<TableCell>& cells, double tolerance);
std::string format_json(const std::vector<TableCell>& cells, double tolerance);

/// Six significant digits.
std::string format_number(double v);

}  // namespace hgs::cli
