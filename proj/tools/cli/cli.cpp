// Copyright 2026 The graphbell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "graphbell/bounds.hpp"
#include "graphbell/errors.hpp"
#include "graphbell/graph.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/oracle.hpp"
#include "graphbell/rational.hpp"
#include "graphbell/report.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell::cli {
namespace {

using nlohmann::ordered_json;

// Invariance checks in `verify` search the unreduced 8^n space.
constexpr int kUnreducedCheckCap = 6;
// Local complementation check solves n + 1 graphs.
constexpr int kLocalComplementCheckCap = 10;
constexpr double kStabilizedTolerance = 1e-9;
constexpr double kQuantumRelativeTolerance = 1e-9;

struct Config {
  std::string family;
  int n = 0;
  std::string edges_path;
  std::string graph6_path;
  int exact_cap = kDefaultExactCap;
  bool allow_large_cap = false;
  int workers = 0;
  std::string format = "text";
  std::string engine = "enumerate";
  bool unreduced = false;
  bool reduced = false;
  bool check = false;
  int min_n = 3;
  int max_n = 10;
  int vertex = -1;
  bool greedy = false;
  bool exhaustive = false;
};

struct TableRow {
  GraphFamily family;
  std::array<const char*, 8> values;  // n = 3..10
};

// Reference values for --check, kept in their mixed original denominators.
constexpr std::array<TableRow, 4> kExpectedTable{{
    {GraphFamily::LinearCluster, {"3/4", "3/4", "5/8", "9/16", "8/16", "7/16", "25/64", "22/64"}},
    {GraphFamily::RingCluster, {"3/4", "3/4", "5/8", "7/16", "7/16", "6/16", "21/64", "19/64"}},
    {GraphFamily::Star, {"3/4", "3/4", "5/8", "10/16", "9/16", "9/16", "34/64", "34/64"}},
    {GraphFamily::FullyConnected, {"3/4", "3/4", "5/8", "10/16", "9/16", "9/16", "34/64", "34/64"}},
}};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const Config& cfg) {
  const int sources = int{!cfg.family.empty()} + int{!cfg.edges_path.empty()} + int{!cfg.graph6_path.empty()};
  if (sources != 1) throw ParseError("give exactly one of --family, --edges, --graph6");
  if (!cfg.family.empty()) {
    if (cfg.n == 0) throw ParseError("--family needs --n");
    try {
      return build_family(parse_family(cfg.family), cfg.n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (!cfg.edges_path.empty()) return parse_edge_list(read_file(cfg.edges_path));

  std::istringstream lines(read_file(cfg.graph6_path));
  std::string line;
  while (std::getline(lines, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError(cfg.graph6_path + " holds no graph");
}

void check_cap(const Config& cfg) {
  if (cfg.exact_cap < 1) throw ParseError("--exact-cap must be positive");
  if (cfg.exact_cap > kDefaultExactCap && !cfg.allow_large_cap) {
    throw CapExceeded("--exact-cap above " + std::to_string(kDefaultExactCap) + " needs --allow-large-cap");
  }
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions opts;
  opts.restrict_z = !cfg.unreduced;
  opts.workers = cfg.workers;
  opts.engine = cfg.engine == "spectral" ? SearchEngine::Spectral : SearchEngine::Enumerate;
  opts.exact_cap = cfg.exact_cap;
  return opts;
}

void add_graph_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--family", cfg.family, "graph family: lc, rc, st or fc");
  cmd->add_option("--n", cfg.n, "vertex count for --family");
  cmd->add_option("--edges", cfg.edges_path, "edge-list file");
  cmd->add_option("--graph6", cfg.graph6_path, "graph6 file");
}

void add_format_option(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_search_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--workers", cfg.workers, "worker threads (default: GRAPHBELL_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--engine", cfg.engine, "search engine")->check(CLI::IsMember({"enumerate", "spectral"}));
}

void add_cap_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--exact-cap", cfg.exact_cap, "largest vertex count solved exactly");
  cmd->add_flag("--allow-large-cap", cfg.allow_large_cap, "permit --exact-cap above the default");
}

int cmd_bound(const Config& cfg, std::ostream& out) {
  check_cap(cfg);
  const Graph g = load_graph(cfg);
  const BoundReport r = classical_bound(g, search_options(cfg));
  if (cfg.format == "json") {
    out << to_json(r, 2) << '\n';
  } else if (cfg.format == "csv") {
    out << csv_header_bound() << '\n' << to_csv_row(r) << '\n';
  } else {
    out << to_text(r);
  }
  return r.d == 1 ? kNoViolation : kOk;
}

std::string table_cell(const BoundReport& r, bool reduced) {
  return reduced ? to_fraction(r.d) : to_fraction_over_pow2(r.d, static_cast<unsigned>(r.n));
}

int cmd_table(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.min_n < 2 || cfg.max_n > kDefaultExactCap || cfg.min_n > cfg.max_n) {
    throw ParseError("table range must satisfy 2 <= min-n <= max-n <= " + std::to_string(kDefaultExactCap));
  }
  SearchOptions opts = search_options(cfg);
  opts.exact_cap = kDefaultExactCap;

  struct Cell {
    GraphFamily family;
    BoundReport report;
  };
  std::vector<Cell> cells;
  int mismatches = 0;
  for (const TableRow& row : kExpectedTable) {
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) {
      cells.push_back({row.family, classical_bound(build_family(row.family, n), opts)});
      if (!cfg.check || n < 3 || n > 10) continue;
      const Rational expected = parse_rational(row.values[static_cast<std::size_t>(n - 3)]);
      if (cells.back().report.d != expected) {
        err << "mismatch: " << family_tag(row.family) << " n=" << n << " expected "
            << row.values[static_cast<std::size_t>(n - 3)] << " got " << to_fraction(cells.back().report.d) << '\n';
        ++mismatches;
      }
    }
  }

  if (cfg.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const Cell& c : cells) {
      rows.push_back({{"family", family_tag(c.family)},
                      {"n", c.report.n},
                      {"c", c.report.c},
                      {"d", table_cell(c.report, cfg.reduced)}});
    }
    out << rows.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "family,n,c,d\n";
    for (const Cell& c : cells) {
      out << family_tag(c.family) << ',' << c.report.n << ',' << c.report.c << ',' << table_cell(c.report, cfg.reduced)
          << '\n';
    }
  } else {
    const int columns = cfg.max_n - cfg.min_n + 1;
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"n"});
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) grid[0].push_back(std::to_string(n));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i % static_cast<std::size_t>(columns) == 0) grid.push_back({family_tag(cells[i].family)});
      grid.back().push_back(table_cell(cells[i].report, cfg.reduced));
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid) {
      for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
    }
    for (const auto& line : grid) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (j == 0) {
          out << std::left << std::setw(static_cast<int>(width[j])) << line[j];
        } else {
          out << "  " << std::right << std::setw(static_cast<int>(width[j])) << line[j];
        }
      }
      out << '\n';
    }
  }
  if (cfg.check) {
    if (mismatches > 0) return kCheckFailed;
    err << "table check: all entries match\n";
  }
  return kOk;
}

struct Check {
  std::string name;
  std::string status;  // pass, fail, skip
  std::string detail;
};

std::string fixed(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::vector<Check> run_checks(const Graph& g, const Config& cfg, std::ostream& err) {
  const int n = g.size();
  std::vector<Check> checks;
  auto skip = [&](const std::string& name, const std::string& why) {
    err << "warning: " << name << " skipped: " << why << '\n';
    checks.push_back({name, "skip", why});
  };

  if (n <= oracle::kDenseCap) {
    const double residual = oracle::check_stabilized(g);
    checks.push_back({"stabilized", residual <= kStabilizedTolerance ? "pass" : "fail",
                      "max generator residual " + fixed(residual)});
    const double q = oracle::quantum_bell_value(g);
    const double expected = std::ldexp(1.0, n);
    checks.push_back({"quantum_value",
                      std::abs(q - expected) <= kQuantumRelativeTolerance * expected ? "pass" : "fail",
                      "<B> = " + fixed(q) + ", expected " + fixed(expected)});
  } else {
    const std::string why = "n = " + std::to_string(n) + " exceeds the dense oracle cap " +
                            std::to_string(oracle::kDenseCap);
    skip("stabilized", why);
    skip("quantum_value", why);
  }

  if (n > cfg.exact_cap) {
    const std::string why = "n = " + std::to_string(n) + " exceeds the exact cap " + std::to_string(cfg.exact_cap);
    for (const char* name : {"classical_bound", "z_restriction", "letter_permutation", "local_complement"}) skip(name, why);
    return checks;
  }

  SearchOptions opts = search_options(cfg);
  const BoundReport r = classical_bound(g, opts);
  const BellOperator terms = bell_terms(g, std::max(kDefaultTermCap, n));
  const std::int64_t replayed = bell_value(terms, r.argmax);
  const std::int64_t ceiling = std::int64_t{1} << n;
  const bool bound_ok = replayed == r.c && r.c > 0 && r.c <= ceiling;
  checks.push_back({"classical_bound", bound_ok ? "pass" : "fail",
                    "C = " + std::to_string(r.c) + ", D = " + to_fraction(r.d) + " (" +
                        to_fraction_over_pow2(r.d, static_cast<unsigned>(n)) + "), argmax replays to " +
                        std::to_string(replayed)});

  SearchOptions fast = opts;
  fast.exact_cap = std::max(opts.exact_cap, n);
  if (n <= kUnreducedCheckCap) {
    fast.restrict_z = false;
    const std::int64_t full = maximize(terms, fast).c;
    checks.push_back({"z_restriction", full == r.c ? "pass" : "fail",
                      "8^n search gives " + std::to_string(full) + ", 4^n search gives " + std::to_string(r.c)});

    using L = PauliLetter;
    const std::array<LetterPermutation, 3> perms{{
        {L::I, L::Y, L::X, L::Z},
        {L::Z, L::X, L::Y, L::I},
        {L::X, L::Y, L::Z, L::I},
    }};
    int failures = 0;
    for (int q = 0; q < n; ++q) {
      for (const LetterPermutation& p : perms) {
        if (maximize(apply_permutation(terms, q, p), fast).c != r.c) ++failures;
      }
    }
    checks.push_back({"letter_permutation", failures == 0 ? "pass" : "fail",
                      std::to_string(3 * n - failures) + "/" + std::to_string(3 * n) +
                          " letter permutations keep C"});
  } else {
    const std::string why = "n = " + std::to_string(n) + " exceeds " + std::to_string(kUnreducedCheckCap);
    skip("z_restriction", why);
    skip("letter_permutation", why);
  }

  if (n <= kLocalComplementCheckCap) {
    SearchOptions lc_opts = opts;
    lc_opts.restrict_z = true;
    lc_opts.engine = SearchEngine::Spectral;
    int failures = 0;
    for (int v = 0; v < n; ++v) {
      if (classical_bound(local_complement(g, v), lc_opts).d != r.d) ++failures;
    }
    checks.push_back({"local_complement", failures == 0 ? "pass" : "fail",
                      std::to_string(n - failures) + "/" + std::to_string(n) +
                          " local complements keep D"});
  } else {
    skip("local_complement", "n = " + std::to_string(n) + " exceeds " + std::to_string(kLocalComplementCheckCap));
  }
  return checks;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  check_cap(cfg);
  const Graph g = load_graph(cfg);
  const std::vector<Check> checks = run_checks(g, cfg, err);
  const bool failed =
      std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });

  if (cfg.format == "json") {
    ordered_json doc;
    doc["n"] = g.size();
    doc["graph6"] = to_graph6(g);
    ordered_json list = ordered_json::array();
    for (const Check& c : checks) list.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    doc["checks"] = list;
    doc["passed"] = !failed;
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "name,status,detail\n";
    for (const Check& c : checks) out << c.name << ',' << c.status << ",\"" << c.detail << "\"\n";
  } else {
    for (const Check& c : checks) {
      std::string tag = c.status;
      std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
      out << '[' << tag << "] " << c.name << ": " << c.detail << '\n';
    }
  }
  return failed ? kCheckFailed : kOk;
}

ordered_json fraction_json(const Rational& r) { return ordered_json::parse(to_json(r)); }

int cmd_compose(const Config& cfg, std::ostream& out) {
  check_cap(cfg);
  const Graph g = load_graph(cfg);
  ComposeOptions opts;
  opts.exact_cap = cfg.exact_cap;
  opts.mode = ComposeMode::Auto;
  if (cfg.greedy) opts.mode = ComposeMode::Greedy;
  if (cfg.exhaustive) opts.mode = ComposeMode::Exhaustive;
  const CompositeBound b = bridge_compose_bound(g, opts);
  const bool tree = is_tree(g);

  if (cfg.format == "json") {
    ordered_json doc = ordered_json::parse(to_json(b));
    doc["geometric_measure_lower_bound"] = fraction_json(geometric_measure_lower_bound(b.value));
    doc["ppt_scope"] = ppt_scope_flag(b.value);
    if (tree) {
      const TreeCertificate t = tree_certificate(g);
      doc["tree_certificate"] = {{"longest_path_length", t.longest_path_length},
                                 {"path", t.path},
                                 {"bound", fraction_json(t.bound)}};
    }
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,value,is_exact\n"
        << g.size() << ',' << to_fraction(b.value) << ',' << (b.is_exact ? "true" : "false") << '\n';
  } else {
    out << to_text(b);
    out << "geometric measure >= " << to_fraction(geometric_measure_lower_bound(b.value)) << '\n';
    if (ppt_scope_flag(b.value)) {
      out << "D >= 1/2: any state violating the inequality has a negative partial transpose on every bipartition\n";
    }
    if (tree) {
      const TreeCertificate t = tree_certificate(g);
      out << "tree certificate: longest path of " << t.longest_path_length << " vertices, D <= "
          << to_fraction(t.bound) << '\n';
    }
  }
  return kOk;
}

int cmd_lc(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  if (cfg.vertex < 0 || cfg.vertex >= g.size()) {
    throw ParseError("--vertex must name a vertex of the graph");
  }
  out << to_edge_list(local_complement(g, cfg.vertex));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact classical bounds for graph-state Bell operators", "graphbell"};
  app.require_subcommand(1);

  CLI::App* bound = app.add_subcommand("bound", "exact classical bound of one graph");
  add_graph_options(bound, cfg);
  add_cap_options(bound, cfg);
  add_search_options(bound, cfg);
  add_format_option(bound, cfg);
  bound->add_flag("--unreduced", cfg.unreduced, "search all 8^n models instead of 4^n");

  CLI::App* table = app.add_subcommand("table", "values for the LC, RC, ST and FC families");
  add_search_options(table, cfg);
  add_format_option(table, cfg);
  table->add_flag("--reduced", cfg.reduced, "print reduced fractions instead of num/2^n");
  table->add_flag("--check", cfg.check, "compare against the stored reference values");
  table->add_option("--min-n", cfg.min_n, "smallest n");
  table->add_option("--max-n", cfg.max_n, "largest n");

  CLI::App* verify = app.add_subcommand("verify", "oracle and invariance checks on one graph");
  add_graph_options(verify, cfg);
  add_cap_options(verify, cfg);
  add_search_options(verify, cfg);
  add_format_option(verify, cfg);

  CLI::App* compose = app.add_subcommand("compose", "upper bound from bridge decomposition");
  add_graph_options(compose, cfg);
  add_cap_options(compose, cfg);
  add_format_option(compose, cfg);
  CLI::Option* greedy = compose->add_flag("--greedy", cfg.greedy, "always split at the most balanced bridge");
  compose->add_flag("--exhaustive", cfg.exhaustive, "minimise over every bridge choice")->excludes(greedy);

  CLI::App* lc = app.add_subcommand("lc", "local complementation");
  add_graph_options(lc, cfg);
  lc->add_option("--vertex", cfg.vertex, "vertex to complement at")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (compose->parsed()) return cmd_compose(cfg, out);
    if (lc->parsed()) return cmd_lc(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "internal error: no command ran\n";
  return kInternalError;
}

}  // namespace graphbell::cli
