#include "reproduce.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace hgs::cli {

namespace {

struct CellSpec {
  int n;
  int k;
  int cut_length;
};

int parse_int(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("'" + std::string(text) + "' is not an integer");
  }
  return v;
}

std::string status_of(const TableCell& c, double tolerance) {
  if (!c.reference) return "";
  return std::abs(c.e_npt_paper_scaled - c.reference->value) <= tolerance ? "match"
                                                                          : "discrepancy";
}

}  // namespace

Family parse_family(std::string_view text) {
  if (text == "single-edge") return Family::single_edge;
  if (text == "complete-k") return Family::complete_k;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Family f) noexcept {
  return f == Family::single_edge ? "single-edge" : "complete-k";
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<TableCell> reproduce_table(const ReproduceOptions& opts) {
  if (opts.n_min < 2 || opts.n_max > kMaxVertices) {
    throw std::invalid_argument("vertex range must lie within [2, " +
                                std::to_string(kMaxVertices) + "]");
  }
  std::vector<CellSpec> specs;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    const int k_lo = opts.family == Family::single_edge ? n : 2;
    const int k_hi = opts.family == Family::single_edge ? n : n - 1;
    for (int k = k_lo; k <= k_hi; ++k) {
      for (int m = 1; m <= n / 2; ++m) specs.push_back({n, k, m});
    }
  }

  const auto& table = opts.family == Family::single_edge
                          ? std::span<const tables::ReferenceCell>(tables::kSingleEdge)
                          : std::span<const tables::ReferenceCell>(tables::kCompleteK);

  std::vector<TableCell> cells(specs.size());
  auto evaluate = [&](std::size_t idx) {
    const auto& s = specs[idx];
    const Method method = opts.method.value_or(default_method(s.n, opts.dense_max_qubits));
    const Hypergraph g = complete_k_graph(s.n, s.k);
    const auto r = negativity(build_state(g), CutSet::leading(s.cut_length, s.n), method);
    cells[idx] = TableCell{opts.family, s.n, s.k, s.cut_length, r.e_npt_paper_scaled, r.e_npt,
                           method, tables::lookup(table, s.n, s.k, s.cut_length)};
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, specs.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < specs.size(); i += workers) evaluate(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return cells;
}

std::string format_csv(const std::vector<TableCell>& cells, double tolerance) {
  std::ostringstream out;
  out << "family,n,k,cut_length,e_npt_paper_scaled,e_npt_normalized,method\n";
  for (const auto& c : cells) {
    out << to_string(c.family) << ',' << c.n << ',' << c.k << ',' << c.cut_length << ','
        << format_number(c.e_npt_paper_scaled) << ',' << format_number(c.e_npt) << ','
        << hgs::to_string(c.method) << '\n';
  }
  int matches = 0, discrepancies = 0;
  for (const auto& c : cells) {
    const auto status = status_of(c, tolerance);
    if (status.empty()) continue;
    if (status == "match") {
      ++matches;
      continue;
    }
    ++discrepancies;
    out << "# discrepancy " << to_string(c.family) << " n=" << c.n << " k=" << c.k
        << " cut_length=" << c.cut_length << " reference=" << format_number(c.reference->value)
        << " computed=" << format_number(c.e_npt_paper_scaled)
        << " delta=" << format_number(c.e_npt_paper_scaled - c.reference->value)
        << (c.reference->trusted ? "" : " (row flagged inconsistent)") << '\n';
  }
  out << "# reference check (tolerance " << format_number(tolerance) << "): " << matches
      << " match, " << discrepancies << " discrepancy\n";
  return out.str();
}

std::string format_json(const std::vector<TableCell>& cells, double tolerance) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json row;
    row["family"] = std::string(to_string(c.family));
    row["n"] = c.n;
    row["k"] = c.k;
    row["cut_length"] = c.cut_length;
    row["e_npt_paper_scaled"] = c.e_npt_paper_scaled;
    row["e_npt_normalized"] = c.e_npt;
    row["method"] = std::string(hgs::to_string(c.method));
    if (c.reference) {
      row["reference"] = c.reference->value;
      row["reference_trusted"] = c.reference->trusted;
      row["status"] = status_of(c, tolerance);
    }
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

}  // namespace hgs::cli
