// Command-line front end: solve, normalize, exact, verify, gen, bench.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "me2c/coloring.hpp"
#include "me2c/generators.hpp"
#include "me2c/graph.hpp"
#include "me2c/matching.hpp"
#include "me2c/normalize.hpp"
#include "me2c/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;     // verify: coloring breaks the 2-color rule
constexpr int kExitPrecondition = 2;   // graph outside the strategy's class
constexpr int kExitParse = 3;          // malformed graph or coloring file
constexpr int kExitInternal = 4;       // certification or self-check failure
constexpr int kExitUsage = 5;          // bad arguments
constexpr int kExitBudget = 6;         // oracle size budget exceeded

// Bad invocation discovered after argument parsing (unreadable input file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

void write_report(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cerr << content;
    return;
  }
  write_output(path, content);
}

me2c::Graph load_graph(const std::string& path) {
  return me2c::Graph::parse(read_file(path));
}

std::string coloring_text(const me2c::Graph& g, const me2c::EdgeColoring& chi) {
  std::ostringstream os;
  os << "colors " << chi.colors << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    os << u << " " << v << " " << chi.color[e] << "\n";
  }
  return os.str();
}

// Reads the coloring format back: "colors k" then one "u v c" line per edge
// in edge-identity order (endpoints may be flipped).
me2c::EdgeColoring parse_coloring(const me2c::Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_tokens = [&](std::vector<std::string>& tokens) {
    tokens.clear();
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '#') continue;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> me2c::ParseError {
    return me2c::ParseError(line_no, what);
  };
  std::vector<std::string> tokens;
  if (!next_tokens(tokens) || tokens.size() != 2 || tokens[0] != "colors")
    throw fail("expected 'colors k' header");
  me2c::EdgeColoring chi;
  chi.color.assign(g.edge_count(), -1);
  try {
    chi.colors = std::stoi(tokens[1]);
  } catch (const std::exception&) {
    throw fail("malformed color count");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!next_tokens(tokens)) throw fail("missing edge color lines");
    if (tokens.size() != 3) throw fail("edge line must be 'u v c'");
    int u, v, c;
    try {
      u = std::stoi(tokens[0]);
      v = std::stoi(tokens[1]);
      c = std::stoi(tokens[2]);
    } catch (const std::exception&) {
      throw fail("malformed edge color line");
    }
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
        g.find_edge(u, v) != e)
      throw fail("line does not name edge " + std::to_string(e));
    if (c < 0) throw fail("negative color");
    chi.color[e] = c;
  }
  if (next_tokens(tokens)) throw fail("trailing content after last edge");
  return chi;
}

std::string report_text(const std::string& instance, const me2c::Graph& g,
                        me2c::Strategy strategy, const me2c::Certificate& cert,
                        const me2c::NormalizeStats& stats, long long wall_ms,
                        bool certified) {
  std::ostringstream os;
  os << "instance " << instance << "\n";
  os << "n " << g.vertex_count() << "\n";
  os << "m " << g.edge_count() << "\n";
  os << "strategy " << me2c::strategy_name(strategy) << "\n";
  os << me2c::certificate_text(cert);
  os << "mod1 " << stats.mod1 << "\n";
  os << "mod2 " << stats.mod2 << "\n";
  os << "mod3 " << stats.mod3 << "\n";
  os << "mod4 " << stats.mod4 << "\n";
  os << "mod5 " << stats.mod5 << "\n";
  if (strategy == me2c::Strategy::PerfectMatching) {
    os << "d2_plus " << stats.d2_plus << "\n";
    os << "d2_minus " << stats.d2_minus << "\n";
  }
  os << "wall_ms " << wall_ms << "\n";
  os << "status " << (certified ? "ok" : "certification_failure") << "\n";
  return os.str();
}

struct SolveArgs {
  std::string graph;
  std::string strategy = "general";
  std::string out = "-";
  std::string report;
};

int cmd_solve(const SolveArgs& a) {
  me2c::Graph g = load_graph(a.graph);
  auto strat = me2c::strategy_from_name(a.strategy);
  if (!strat) {
    std::cerr << "unknown strategy '" << a.strategy << "'\n";
    return kExitUsage;
  }
  auto t0 = std::chrono::steady_clock::now();
  me2c::SolveResult sr;
  try {
    sr = me2c::solve(g, *strat);
  } catch (const me2c::CertificationError& e) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    write_report(a.report, report_text(a.graph, g, *strat, e.certificate,
                                       e.stats, ms, false));
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitInternal;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (!me2c::check_feasible(g, sr.coloring).feasible) {
    std::cerr << "internal error: solver output failed verification\n";
    return kExitInternal;
  }
  write_output(a.out, coloring_text(g, sr.coloring));
  write_report(a.report, report_text(a.graph, g, *strat, sr.certificate,
                                     sr.stats, ms, true));
  return kExitOk;
}

struct NormalizeArgs {
  std::string graph;
  std::string strategy = "general";
  std::string out = "-";
  std::string trace;
};

int cmd_normalize(const NormalizeArgs& a) {
  me2c::Graph g = load_graph(a.graph);
  auto strat = me2c::strategy_from_name(a.strategy);
  if (!strat) {
    std::cerr << "unknown strategy '" << a.strategy << "'\n";
    return kExitUsage;
  }
  me2c::NormalizeResult nr = me2c::normalize(g, *strat);
  write_output(a.out, nr.log.result().serialize());
  if (!a.trace.empty()) write_output(a.trace, nr.log.trace());
  return kExitOk;
}

struct ExactArgs {
  std::string graph;
  int budget = 14;
  std::string out = "-";
};

int cmd_exact(const ExactArgs& a) {
  me2c::Graph g = load_graph(a.graph);
  me2c::EdgeColoring chi = me2c::exact_opt(g, a.budget);
  write_output(a.out, coloring_text(g, chi));
  return kExitOk;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
};

int cmd_verify(const VerifyArgs& a) {
  me2c::Graph g = load_graph(a.graph);
  me2c::EdgeColoring chi = parse_coloring(g, read_file(a.coloring));
  me2c::FeasibilityReport rep = me2c::check_feasible(g, chi);
  if (!rep.feasible) {
    std::cout << "infeasible vertex=" << rep.vertex << " colors=";
    for (size_t i = 0; i < rep.colors_seen.size(); ++i)
      std::cout << (i ? "," : "") << rep.colors_seen[i];
    std::cout << "\n";
    return kExitInfeasible;
  }
  std::cout << "feasible " << chi.canonicalized().colors << "\n";
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::string out = "-";
};

int cmd_gen(const GenArgs& a) {
  auto need = [&](size_t count) {
    if (a.params.size() != count)
      throw std::runtime_error("family '" + a.family + "' expects " +
                               std::to_string(count) + " parameter(s)");
  };
  auto as_int = [&](size_t i) {
    size_t pos = 0;
    int v = std::stoi(a.params[i], &pos);
    if (pos != a.params[i].size()) throw std::runtime_error("bad integer parameter");
    return v;
  };
  me2c::Graph g;
  try {
    if (a.family == "cycle") {
      need(1);
      int n = as_int(0);
      if (n < 3) throw std::runtime_error("cycle needs n >= 3");
      g = me2c::gen_cycle(n);
    } else if (a.family == "complete") {
      need(1);
      int n = as_int(0);
      if (n < 1) throw std::runtime_error("complete needs n >= 1");
      g = me2c::gen_complete(n);
    } else if (a.family == "petersen") {
      need(0);
      g = me2c::gen_petersen();
    } else if (a.family == "subcubic") {
      need(1);
      int n = as_int(0);
      if (n < 1) throw std::runtime_error("subcubic needs n >= 1");
      g = me2c::gen_subcubic_random(n, a.seed);
    } else if (a.family == "clawfree") {
      need(1);
      int n = as_int(0);
      if (n < 1) throw std::runtime_error("clawfree needs n >= 1");
      g = me2c::gen_clawfree_random(n, a.seed);
    } else if (a.family == "pm") {
      need(2);
      int n = as_int(0);
      double p = std::stod(a.params[1]);
      if (n < 2 || n % 2 != 0) throw std::runtime_error("pm needs even n >= 2");
      if (p < 0.0 || p > 1.0) throw std::runtime_error("pm needs p in [0,1]");
      g = me2c::gen_pm_random(n, p, a.seed);
    } else if (a.family == "chain") {
      need(1);
      int k = as_int(0);
      if (k < 1) throw std::runtime_error("chain needs k >= 1");
      g = me2c::gen_cactus_chain(k);
    } else {
      throw std::runtime_error("unknown family '" + a.family + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "gen: " << e.what() << "\n";
    return kExitUsage;
  }
  write_output(a.out, g.serialize());
  return kExitOk;
}

struct BenchArgs {
  std::string dir;
  std::string strategy = "general";
  int oracle_budget = 12;
  std::string out = "-";
};

int cmd_bench(const BenchArgs& a) {
  auto strat = me2c::strategy_from_name(a.strategy);
  if (!strat) {
    std::cerr << "unknown strategy '" << a.strategy << "'\n";
    return kExitUsage;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(a.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".g")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "# me2c bench csv v1\n";
  csv << "instance,n,m,strategy,achieved,bound,bound_kind,ratio_num,ratio_den,"
         "opt,opt_ratio_num,opt_ratio_den,mod1,mod2,mod3,mod4,mod5,"
         "d2_plus,d2_minus,wall_ms,status\n";
  for (const auto& path : files) {
    std::string name = path.filename().string();
    std::string row = name;
    me2c::Graph g;
    try {
      g = me2c::Graph::parse(read_file(path.string()));
    } catch (const me2c::ParseError&) {
      csv << row << ",,,,,,,,,,,,,,,,,,,,parse\n";
      continue;
    }
    row += "," + std::to_string(g.vertex_count()) + "," +
           std::to_string(g.edge_count()) + "," + me2c::strategy_name(*strat);
    auto t0 = std::chrono::steady_clock::now();
    me2c::SolveResult sr;
    std::string status = "ok";
    try {
      sr = me2c::solve(g, *strat);
    } catch (const me2c::PreconditionError&) {
      csv << row << ",,,,,,,,,,,,,,,,,precondition\n";
      continue;
    } catch (const me2c::CertificationError& e) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      const me2c::Certificate& c = e.certificate;
      // Metrics are known; only the oracle columns stay empty.
      csv << row << "," << c.achieved << "," << c.bound << ","
          << me2c::bound_kind_name(c.bound_kind) << "," << c.ratio.num << ","
          << c.ratio.den << ",,,," << e.stats.mod1 << "," << e.stats.mod2
          << "," << e.stats.mod3 << "," << e.stats.mod4 << "," << e.stats.mod5
          << "," << e.stats.d2_plus << "," << e.stats.d2_minus << "," << ms
          << ",certification_failure\n";
      continue;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    const me2c::Certificate& c = sr.certificate;
    row += "," + std::to_string(c.achieved) + "," + std::to_string(c.bound) +
           "," + me2c::bound_kind_name(c.bound_kind) + "," +
           std::to_string(c.ratio.num) + "," + std::to_string(c.ratio.den);
    if (g.edge_count() <= a.oracle_budget) {
      me2c::EdgeColoring opt = me2c::exact_opt(g, a.oracle_budget);
      ME2C_CHECK(c.achieved <= opt.colors && opt.colors <= c.bound);
      me2c::Fraction opt_ratio = c.achieved > 0
                                     ? me2c::Fraction(opt.colors, c.achieved)
                                     : me2c::Fraction(1, 1);
      row += "," + std::to_string(opt.colors) + "," +
             std::to_string(opt_ratio.num) + "," + std::to_string(opt_ratio.den);
    } else {
      row += ",,,";
    }
    row += "," + std::to_string(sr.stats.mod1) + "," +
           std::to_string(sr.stats.mod2) + "," + std::to_string(sr.stats.mod3) +
           "," + std::to_string(sr.stats.mod4) + "," +
           std::to_string(sr.stats.mod5) + "," +
           std::to_string(sr.stats.d2_plus) + "," +
           std::to_string(sr.stats.d2_minus) + "," + std::to_string(ms) + "," +
           status;
    csv << row << "\n";
  }
  write_output(a.out, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate maximum edge 2-coloring toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* s_solve = app.add_subcommand("solve", "color a graph and certify the ratio");
  s_solve->add_option("graph", solve_args.graph, "graph file")->required();
  s_solve->add_option("--strategy", solve_args.strategy,
                      "general|subcubic|clawfree|pm");
  s_solve->add_option("--out", solve_args.out, "coloring output ('-' = stdout)");
  s_solve->add_option("--report", solve_args.report,
                      "run report output (default stderr)");

  NormalizeArgs norm_args;
  auto* s_norm = app.add_subcommand("normalize", "rewrite until no modification applies");
  s_norm->add_option("graph", norm_args.graph, "graph file")->required();
  s_norm->add_option("--strategy", norm_args.strategy,
                     "general|subcubic|clawfree|pm");
  s_norm->add_option("--out", norm_args.out, "normalized graph output");
  s_norm->add_option("--trace", norm_args.trace, "step trace output file");

  ExactArgs exact_args;
  auto* s_exact = app.add_subcommand("exact", "optimal coloring by branch and bound");
  s_exact->add_option("graph", exact_args.graph, "graph file")->required();
  s_exact->add_option("--budget", exact_args.budget, "edge budget (max 20)");
  s_exact->add_option("--out", exact_args.out, "coloring output");

  VerifyArgs verify_args;
  auto* s_verify = app.add_subcommand("verify", "check a coloring file");
  s_verify->add_option("graph", verify_args.graph, "graph file")->required();
  s_verify->add_option("coloring", verify_args.coloring, "coloring file")->required();

  GenArgs gen_args;
  auto* s_gen = app.add_subcommand("gen", "generate an instance");
  s_gen->add_option("family", gen_args.family,
                    "cycle|complete|petersen|subcubic|clawfree|pm|chain")
      ->required();
  s_gen->add_option("params", gen_args.params, "family parameters");
  s_gen->add_option("--seed", gen_args.seed, "PRNG seed");
  s_gen->add_option("--out", gen_args.out, "graph output");

  BenchArgs bench_args;
  auto* s_bench = app.add_subcommand("bench", "run a corpus directory to CSV");
  s_bench->add_option("dir", bench_args.dir, "directory of .g files")->required();
  s_bench->add_option("--strategy", bench_args.strategy,
                      "general|subcubic|clawfree|pm");
  s_bench->add_option("--oracle-budget", bench_args.oracle_budget,
                      "run the exact oracle up to this edge count");
  s_bench->add_option("--out", bench_args.out, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s_solve->parsed()) return cmd_solve(solve_args);
    if (s_norm->parsed()) return cmd_normalize(norm_args);
    if (s_exact->parsed()) return cmd_exact(exact_args);
    if (s_verify->parsed()) return cmd_verify(verify_args);
    if (s_gen->parsed()) return cmd_gen(gen_args);
    if (s_bench->parsed()) return cmd_bench(bench_args);
  } catch (const me2c::ParseError& e) {
    std::cerr << "parse error line " << e.line() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const me2c::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const me2c::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
