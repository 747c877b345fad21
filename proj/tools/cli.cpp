#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hgstate/boolean.hpp"
#include "hgstate/entanglement.hpp"
#include "hgstate/hypergraph.hpp"
#include "hgstate/state.hpp"
#include "reproduce.hpp"

namespace hgs::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format;
  std::string empty_edge = "reject";

  std::string table;
  int arity = 0;
  std::string style = "compact";
  std::string cut;
  std::string scale = "normalized";
  std::string method;
  int cut_length = 0;
  std::string family;
  std::string n_range = "2..8";
  unsigned threads = 1;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

Hypergraph load_hypergraph(const Options& o, std::istream& in) {
  const auto policy = o.empty_edge == "identity" ? EmptyEdgePolicy::drop_as_identity
                                                 : EmptyEdgePolicy::reject;
  return parse_hypergraph(slurp(o.input, in), policy);
}

CutSet parse_cut(const std::string& text, int n) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw std::invalid_argument("cut entry '" + item + "' is not an integer");
    if (v < 0 || v >= n) {
      throw std::invalid_argument("cut index " + std::to_string(v) + " out of range for n = " +
                                  std::to_string(n));
    }
    idx.push_back(v);
  }
  return CutSet(std::move(idx), n);
}

Method choose_method(const Options& o, int n) {
  return o.method.empty() ? default_method(n) : parse_method(o.method);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.output + "'");
  f << text;
}

std::string cmd_to_boolean(const Options& o, std::istream& in) {
  const auto g = load_hypergraph(o, in);
  const auto f = boolean_from_hypergraph(g);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = f.arity();
    doc["table"] = f.to_string();
    return doc.dump() + "\n";
  }
  return f.to_string() + "\n";
}

std::string cmd_to_hypergraph(const Options& o, std::istream& in) {
  std::string text = o.table == "-" ? trim(slurp("-", in)) : o.table;
  const auto f = o.arity > 0 ? BooleanTable::from_string(text, o.arity)
                             : BooleanTable::from_string(text);
  return to_json(hypergraph_from_boolean(f)) + "\n";
}

std::string cmd_state(const Options& o, std::istream& in) {
  const auto s = build_state(load_hypergraph(o, in));
  if (o.style == "lines") return s.to_lines();
  return s.to_compact_string() + "\n";
}

std::string cmd_negativity(const Options& o, std::istream& in) {
  const auto g = load_hypergraph(o, in);
  const int n = g.vertex_count();
  const auto cut = parse_cut(o.cut, n);
  const auto r = negativity(build_state(g), cut, choose_method(o, n));
  const bool paper = o.scale == "paper";
  if (o.format == "csv") {
    std::string s = "eigenvalue\n";
    for (double v : paper ? r.scaled_eigenvalues() : r.eigenvalues) s += format_number(v) + "\n";
    return s;
  }
  return r.to_json(paper) + "\n";
}

std::string cmd_profile(const Options& o, std::istream& in) {
  const auto g = load_hypergraph(o, in);
  const auto rows = entanglement_profile(g, choose_method(o, g.vertex_count()));
  if (o.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["cut_length"] = r.cut_length;
      row["e_npt_paper_scaled"] = r.e_npt_paper_scaled;
      row["e_npt_normalized"] = r.e_npt;
      row["method"] = std::string(to_string(r.method));
      doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
  }
  std::string s = "cut_length,e_npt_paper_scaled,e_npt_normalized\n";
  for (const auto& r : rows) {
    s += std::to_string(r.cut_length) + "," + format_number(r.e_npt_paper_scaled) + "," +
         format_number(r.e_npt) + "\n";
  }
  return s;
}

std::string cmd_verify_symmetry(const Options& o, std::istream& in) {
  const auto g = load_hypergraph(o, in);
  EqualSpectraOptions opts;
  if (!o.method.empty()) opts.method = parse_method(o.method);
  return spectra_equal_across_cuts(g, o.cut_length, opts).to_json() + "\n";
}

std::string cmd_witness(const Options& o, std::istream& in) {
  const auto g = load_hypergraph(o, in);
  const int n = g.vertex_count();
  const auto cut = parse_cut(o.cut, n);
  const auto pt = partial_transpose(density_matrix(build_state(g)), cut);
  const auto w = sylvester_witness(pt);
  nlohmann::ordered_json doc;
  doc["cut"] = cut.indices();
  if (!w) {
    doc["witness"] = nullptr;
  } else {
    doc["witness"] = *w;
    // Determinant of the underlying +/-1 submatrix.
    const double scale = static_cast<double>(dimension(n));
    SymmetricMatrix sub = pt.principal_submatrix(*w);
    SymmetricMatrix signs(sub.order());
    for (std::size_t a = 0; a < sub.order(); ++a) {
      for (std::size_t b = a; b < sub.order(); ++b) signs.set(a, b, sub(a, b) * scale);
    }
    doc["sign_minor"] = determinant(signs);
    if (w->size() == 3) {
      if (auto p = order_three_pattern(pt, (*w)[0], (*w)[1], (*w)[2])) doc["pattern"] = *p;
    }
  }
  return doc.dump() + "\n";
}

std::string cmd_reproduce(const Options& o) {
  ReproduceOptions opts;
  opts.family = parse_family(o.family);
  std::tie(opts.n_min, opts.n_max) = parse_range(o.n_range);
  if (!o.method.empty() && o.method != "auto") opts.method = parse_method(o.method);
  opts.threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  const auto cells = reproduce_table(opts);
  return o.format == "json" ? format_json(cells, opts.tolerance) : format_csv(cells, opts.tolerance);
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "Hypergraph JSON file ('-' for stdin)")->required();
  cmd->add_option("--allow-empty-edge", o.empty_edge,
                  "Accept empty hyperedges as the identity operator")
      ->check(CLI::IsMember({"reject", "identity"}));
}

void add_output(CLI::App* cmd, Options& o, std::vector<std::string> formats) {
  cmd->add_option("-o,--output", o.output, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
}

void add_method(CLI::App* cmd, Options& o, bool allow_auto = false) {
  std::vector<std::string> names{"dense", "schmidt"};
  if (allow_auto) names.push_back("auto");
  cmd->add_option("--method", o.method, "Eigenvalue route")->check(CLI::IsMember(names));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hypergraph states, Boolean functions and partial-transpose negativity", "hgstate"};
  app.require_subcommand(1, 1);
  Options o;

  auto* to_boolean = app.add_subcommand("to-boolean", "Print the truth table of a hypergraph");
  add_input(to_boolean, o);
  add_output(to_boolean, o, {"text", "json"});

  auto* to_hypergraph = app.add_subcommand("to-hypergraph", "Recover the hypergraph of a truth table");
  to_hypergraph->add_option("--table", o.table, "2^n characters from {0,1}, index 0 first ('-' for stdin)")
      ->required();
  to_hypergraph->add_option("--n", o.arity, "Arity (inferred from the length when omitted)");
  add_output(to_hypergraph, o, {"json"});

  auto* state = app.add_subcommand("state", "Print the sign vector of |G>");
  add_input(state, o);
  state->add_option("--style", o.style, "compact (+/- string) or lines (one +1/-1 per line)")
      ->check(CLI::IsMember({"compact", "lines"}));
  add_output(state, o, {"text"});

  auto* neg = app.add_subcommand("negativity", "Partial-transpose spectrum and E_NPT across a cut");
  add_input(neg, o);
  neg->add_option("--cut", o.cut, "Comma-separated qubit indices")->required();
  neg->add_option("--scale", o.scale, "Eigenvalue scale")
      ->check(CLI::IsMember({"paper", "normalized"}));
  add_method(neg, o);
  add_output(neg, o, {"json", "csv"});

  auto* profile = app.add_subcommand("profile", "E_NPT for the leading cut of every length");
  add_input(profile, o);
  add_method(profile, o);
  add_output(profile, o, {"csv", "json"});

  auto* verify = app.add_subcommand("verify-symmetry", "Compare PT spectra over all cuts of one length");
  add_input(verify, o);
  verify->add_option("--cut-length", o.cut_length, "Cut length m")->required();
  add_method(verify, o);
  add_output(verify, o, {"json"});

  auto* witness = app.add_subcommand("witness", "Principal minor certifying a negative PT eigenvalue");
  add_input(witness, o);
  witness->add_option("--cut", o.cut, "Comma-separated qubit indices")->required();
  add_output(witness, o, {"json"});

  auto* reproduce = app.add_subcommand("reproduce-table", "Regenerate the reference E_NPT tables");
  reproduce->add_option("--family", o.family, "single-edge or complete-k")
      ->required()
      ->check(CLI::IsMember({"single-edge", "complete-k"}));
  reproduce->add_option("--n-range", o.n_range, "Vertex counts, e.g. 2..8");
  reproduce->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  add_method(reproduce, o, true);
  add_output(reproduce, o, {"csv", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    std::string text;
    if (*to_boolean) {
      text = cmd_to_boolean(o, in);
    } else if (*to_hypergraph) {
      text = cmd_to_hypergraph(o, in);
    } else if (*state) {
      text = cmd_state(o, in);
    } else if (*neg) {
      text = cmd_negativity(o, in);
    } else if (*profile) {
      text = cmd_profile(o, in);
    } else if (*verify) {
      text = cmd_verify_symmetry(o, in);
    } else if (*witness) {
      text = cmd_witness(o, in);
    } else {
      text = cmd_reproduce(o);
    }
    emit(o, out, text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace hgs::cli
