// Copyright 2026 The qaoachain Authors
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

// Command-line front end: solve, compile, submit, status, result, bench,
// chains.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaoachain/bench.hpp"
#include "qaoachain/compiler.hpp"
#include "qaoachain/errors.hpp"
#include "qaoachain/hardware.hpp"
#include "qaoachain/optimizer.hpp"
#include "qaoachain/problem_model.hpp"
#include "qaoachain/qasm.hpp"
#include "qaoachain/report.hpp"
#include "qaoachain/task_service.hpp"

using namespace qaoachain;

namespace {

constexpr int kExitError = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitUnavailable = 3;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string calib;
  std::string store = ".qaoachain";
};

// Either a weight graph read as is, or an application instance.
struct ProblemOptions {
  std::string kind;  // empty: --graph is the Ising weight graph
  std::string graph;
  std::vector<std::int64_t> numbers;
  std::size_t colors = 3;
  std::string sets;
  std::size_t universe = 0;
  double penalty = 2.0;
};

struct Problem {
  WeightGraph ising;
  Sense sense = Sense::kMinimize;
  std::optional<ProblemGraph> drawing;  // graph to draw for maxcut / coloring
  std::string kind;
  std::size_t colors = 0;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& o) {
  cmd->add_option("--problem", o.kind, "maxcut | partition | coloring | setpacking (omit to read --graph as a weight graph)")
      ->check(CLI::IsMember({"maxcut", "partition", "coloring", "setpacking"}));
  cmd->add_option("--graph", o.graph, "graph JSON file");
  cmd->add_option("--numbers", o.numbers, "number list for partition, comma separated")->delimiter(',');
  cmd->add_option("--colors", o.colors, "colour count for coloring");
  cmd->add_option("--sets", o.sets, "set packing family, e.g. \"0,1;1,2;3\"");
  cmd->add_option("--universe", o.universe, "set packing universe size (default: largest element + 1)");
  cmd->add_option("--penalty", o.penalty, "set packing overlap penalty (> 1)");
}

std::vector<std::vector<std::size_t>> parse_sets(const std::string& text) {
  std::vector<std::vector<std::size_t>> sets;
  std::stringstream outer(text);
  for (std::string part; std::getline(outer, part, ';');) {
    std::vector<std::size_t> set;
    std::stringstream inner(part);
    for (std::string item; std::getline(inner, item, ',');) {
      if (item.find_first_not_of(" ") == std::string::npos) continue;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (v < 0 || item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
        set.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ConfigError("bad set element '" + item + "' in --sets");
      }
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

Problem load_problem(const ProblemOptions& o) {
  Problem p;
  p.kind = o.kind;
  auto need_graph = [&] {
    if (o.graph.empty()) throw ConfigError("--graph is required" + (o.kind.empty() ? "" : " for --problem " + o.kind));
    return read_graph(o.graph);
  };
  if (o.kind.empty()) {
    p.ising = need_graph();
    return p;
  }
  QuboMatrix q;
  if (o.kind == "maxcut") {
    p.drawing = problem_graph_from(need_graph());
    q = qubo_from_maxcut(*p.drawing);
  } else if (o.kind == "coloring") {
    p.drawing = problem_graph_from(need_graph());
    p.colors = o.colors;
    q = qubo_from_graph_coloring(*p.drawing, o.colors);
  } else if (o.kind == "partition") {
    if (o.numbers.empty()) throw ConfigError("--numbers is required for --problem partition");
    q = qubo_from_number_partition(o.numbers);
  } else {
    const auto sets = parse_sets(o.sets);
    std::size_t universe = o.universe;
    for (const auto& s : sets)
      for (std::size_t e : s) universe = std::max(universe, o.universe ? 0 : e + 1);
    q = qubo_from_set_packing(universe, sets, o.penalty);
  }
  p.sense = q.sense();
  p.ising = weight_graph_from_ising(ising_from_qubo(q));
  return p;
}

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + real(v[i]);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string params_json(const QaoaParams& p) {
  return "{\"p\": " + std::to_string(p.depth()) + ", \"gamma\": [" + join(p.gamma) + "], \"beta\": [" + join(p.beta) +
         "]}\n";
}

QaoaParams read_params(const std::string& path) {
  const std::string text = read_text(path);
  try {
    const auto j = nlohmann::json::parse(text);
    QaoaParams p(j.at("gamma").get<std::vector<double>>(), j.at("beta").get<std::vector<double>>());
    if (j.contains("p") && j.at("p").get<std::size_t>() != p.depth()) {
      throw ParseError("\"p\" disagrees with the angle lists", path);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), path);
  }
}

// ------------------------------------------------------------------ solve

struct SolveOptions {
  ProblemOptions problem;
  std::size_t p = 1;
  std::string optimizer = "grid";
  std::string init = "random";
  std::size_t grid = 64;
  bool full = false;
  std::string out, trace, weight_graph;
};

int run_solve(const Globals& g, const SolveOptions& o) {
  const Problem problem = load_problem(o.problem);
  OptimizeOptions opt;
  opt.depth = o.p;
  opt.seed = g.seed.value_or(0);
  opt.grid_gamma_points = opt.grid_beta_points = o.grid;
  opt.use_decomposition = !o.full;
  opt.init = o.init == "interp" ? InitStrategy::kInterpChain : InitStrategy::kRandom;
  opt.optimizer = o.optimizer == "grid" ? OptimizerKind::kGrid : OptimizerKind::kSimplex;
  if (opt.optimizer == OptimizerKind::kGrid && o.p > 1 && opt.init != InitStrategy::kInterpChain) {
    throw ConfigError("grid search needs p = 1; use --init interp or --optimizer simplex for deeper circuits");
  }
  const auto res = optimize(problem.ising, opt);

  std::printf("nodes      %zu\nedges      %zu\np          %zu\n", problem.ising.num_nodes(), problem.ising.num_edges(),
              res.params.depth());
  std::printf("gamma      %s\nbeta       %s\n", join(res.params.gamma).c_str(), join(res.params.beta).c_str());
  std::printf("E_p        %s\nevaluations %zu%s\n", real(res.energy).c_str(), res.trace.size(),
              res.converged ? "" : " (not converged)");
  if (!o.out.empty()) write_text(o.out, params_json(res.params));
  if (!o.weight_graph.empty()) write_graph(o.weight_graph, problem.ising);
  if (!o.trace.empty()) {
    std::ofstream out(o.trace);
    write_trace_csv(out, res.trace);
    if (!out) throw Error("cannot write '" + o.trace + "'");
  }
  return 0;
}

// ---------------------------------------------------------------- compile

struct CompileOptions {
  ProblemOptions problem;
  std::string params;
  std::vector<double> gamma, beta;
  std::string out = "circuit.qasm";
  std::string layout = "layout.json";
  std::size_t b_max = 5;
};

// Chain for n logical qubits: the best subchain of the calibrated chip, or
// an ideal line 0..n−1 without a calibration file.
std::pair<std::vector<int>, double> choose_chain(const Globals& g, std::size_t n) {
  if (g.calib.empty()) {
    std::vector<int> chain(n);
    std::iota(chain.begin(), chain.end(), 0);
    return {chain, 1.0};
  }
  const ChipModel chip = load_calibration(g.calib);
  if (n > chip.num_qubits()) {
    throw CapacityError("graph needs " + std::to_string(n) + " qubits but the chip has " +
                        std::to_string(chip.num_qubits()));
  }
  if (n < 2) return {{chip.qubits().front().id}, 1.0};
  const auto chosen = select_subchain(build_subchain_library(chip, n), n);
  return {chosen.qubits, chosen.fidelity};
}

int run_compile(const Globals& g, const CompileOptions& o) {
  const Problem problem = load_problem(o.problem);
  QaoaParams params;
  if (!o.params.empty()) {
    params = read_params(o.params);
  } else if (!o.gamma.empty()) {
    params = QaoaParams(o.gamma, o.beta);
  } else {
    throw ConfigError("give --params FILE or --gamma/--beta");
  }
  const auto [chain, fidelity] = choose_chain(g, problem.ising.num_nodes());
  const auto res = compile(problem.ising, params, chain, o.b_max);
  write_text(o.out, emit_qasm(res.circuit));
  write_text(o.layout, layout_to_json(res.circuit));

  std::string chain_text;
  for (int q : chain) chain_text += (chain_text.empty() ? "" : " ") + std::to_string(q);
  std::printf("qubits       %zu\nchain        %s\nfidelity     %s\n", res.circuit.num_qubits, chain_text.c_str(),
              real(fidelity).c_str());
  std::printf("template     %zu cycles (predicted last RZZ cycle %zu)\n", res.template_cycles, res.predicted_last_cycle);
  std::printf("depth        %zu (before optimization %zu)\ncnots        %zu (before optimization %zu)\n",
              res.circuit.depth(), res.depth_before_optimization, res.circuit.cnot_count(),
              res.cnot_before_optimization);
  std::printf("wrote        %s, %s\n", o.out.c_str(), o.layout.c_str());
  return 0;
}

// ------------------------------------------------------------ task verbs

struct SubmitOptions {
  std::string qasm;
  std::uint64_t shots = 100;
  std::string name;
  bool wait = false;
};

void print_counts(const Counts& counts) {
  for (const auto& [bits, n] : counts) std::printf("%s %llu\n", bits.c_str(), static_cast<unsigned long long>(n));
}

int run_submit(const Globals& g, const SubmitOptions& o) {
  TaskService service(g.store);
  const std::string id = service.submit(read_text(o.qasm), o.shots, o.name, g.seed);
  std::printf("%s\n", id.c_str());
  if (o.wait) {
    const auto r = service.wait(id);
    std::printf("status %s\n", std::string(status_name(r.status)).c_str());
    if (r.status == TaskStatus::kFailed) {
      std::fprintf(stderr, "error: %s\n", r.error.c_str());
      return kExitError;
    }
    print_counts(r.counts);
  }
  return 0;
}

int run_status(const Globals& g, const std::string& id) {
  TaskService service(g.store);
  const auto r = service.record(id);
  std::printf("%s\n", std::string(status_name(r.status)).c_str());
  if (r.status == TaskStatus::kFailed) std::printf("error: %s\n", r.error.c_str());
  return 0;
}

struct ResultOptions {
  std::string id;
  ProblemOptions problem;
  std::size_t top = 2;
  std::string dot, hist;
};

int run_result(const Globals& g, const ResultOptions& o) {
  TaskService service(g.store);
  const Counts counts = service.result(o.id);
  const bool scored = !o.problem.graph.empty() || !o.problem.numbers.empty() || !o.problem.sets.empty();
  if (!scored) {
    print_counts(counts);
    return 0;
  }
  const Problem problem = load_problem(o.problem);
  const auto rows = process_results(counts, problem.ising, o.top, problem.sense);
  std::printf("%-4s %-*s %7s %22s %22s  %s\n", "rank", static_cast<int>(std::max<std::size_t>(4, rows.front().bits.size())),
              "bits", "count", "energy", "objective", "solution");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string extra;
    if (problem.kind == "coloring") {
      for (std::size_t c : decode_coloring(assignment_of(r.bits), problem.drawing->num_nodes, problem.colors)) {
        extra += (extra.empty() ? " colors " : ",") + std::to_string(c);
      }
    }
    std::printf("%-4zu %-4s %7llu %22s %22s  %s%s\n", i + 1, r.bits.c_str(), static_cast<unsigned long long>(r.count),
                real(r.energy).c_str(), real(r.objective).c_str(), r.solution ? "*" : "", extra.c_str());
  }
  if (!o.hist.empty()) {
    std::ofstream out(o.hist);
    write_histogram_csv(out, rows);
    if (!out) throw Error("cannot write '" + o.hist + "'");
  }
  if (!o.dot.empty()) {
    const std::string& best = rows.front().bits;
    if (problem.kind == "coloring") {
      const auto& pg = *problem.drawing;
      write_text(o.dot, graph_dot(WeightGraph(std::vector<double>(pg.num_nodes, 0), pg.edges),
                                  decode_coloring(assignment_of(best), pg.num_nodes, problem.colors)));
    } else if (problem.drawing) {
      const auto& pg = *problem.drawing;
      write_text(o.dot, partition_dot(WeightGraph(std::vector<double>(pg.num_nodes, 0), pg.edges), best));
    } else {
      write_text(o.dot, partition_dot(problem.ising, best));
    }
  }
  return 0;
}

// ------------------------------------------------------- bench / chains

int run_bench_cmd(const Globals& g, BenchConfig cfg, const std::string& csv) {
  cfg.seed = g.seed.value_or(0);
  const auto rows = run_bench(cfg);
  if (csv.empty() || csv == "-") {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(csv);
    write_bench_csv(out, rows);
    if (!out) throw Error("cannot write '" + csv + "'");
    std::printf("%zu rows written to %s\n", rows.size(), csv.c_str());
  }
  return 0;
}

int run_chains(const Globals& g, std::size_t max_len, std::size_t beam, bool exhaustive) {
  if (g.calib.empty()) throw ConfigError("chains needs --calib");
  const ChipModel chip = load_calibration(g.calib);
  if (max_len == 0) max_len = chip.num_qubits();
  std::fputs(library_to_json(build_subchain_library(chip, max_len, beam, exhaustive)).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA modelling, parameter search and chain compilation"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for optimizer initialization, sampling and benchmark graphs");
  app.add_option("--calib", g.calib, "chip calibration JSON");
  app.add_option("--store", g.store, "task store directory")->capture_default_str();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "optimize QAOA angles for a problem");
  add_problem_options(solve_cmd, solve.problem);
  solve_cmd->add_option("--p", solve.p, "QAOA depth")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--optimizer", solve.optimizer)->check(CLI::IsMember({"grid", "simplex"}));
  solve_cmd->add_option("--init", solve.init)->check(CLI::IsMember({"random", "interp"}));
  solve_cmd->add_option("--grid", solve.grid, "grid points per axis")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--full", solve.full, "evaluate on the full statevector instead of light cones");
  solve_cmd->add_option("--out", solve.out, "write angles as JSON");
  solve_cmd->add_option("--trace", solve.trace, "write the evaluation trace as CSV");
  solve_cmd->add_option("--write-graph", solve.weight_graph, "write the Ising weight graph");

  CompileOptions comp;
  auto* compile_cmd = app.add_subcommand("compile", "compile to a chain and write QASM plus layout");
  add_problem_options(compile_cmd, comp.problem);
  compile_cmd->add_option("--params", comp.params, "angles JSON from solve --out");
  compile_cmd->add_option("--gamma", comp.gamma)->delimiter(',');
  compile_cmd->add_option("--beta", comp.beta)->delimiter(',');
  compile_cmd->add_option("--out", comp.out)->capture_default_str();
  compile_cmd->add_option("--layout", comp.layout)->capture_default_str();
  compile_cmd->add_option("--bmax", comp.b_max, "mapping search width per cost")->check(CLI::PositiveNumber);

  SubmitOptions sub;
  auto* submit_cmd = app.add_subcommand("submit", "queue a QASM file for sampling");
  submit_cmd->add_option("qasm", sub.qasm)->required();
  submit_cmd->add_option("--shots", sub.shots)->check(CLI::PositiveNumber);
  submit_cmd->add_option("--name", sub.name);
  submit_cmd->add_flag("--wait", sub.wait, "block until the task finishes and print counts");

  std::string status_id;
  auto* status_cmd = app.add_subcommand("status", "print a task's status");
  status_cmd->add_option("id", status_id)->required();

  ResultOptions res;
  auto* result_cmd = app.add_subcommand("result", "print counts, or ranked solutions when a problem is given");
  result_cmd->add_option("id", res.id)->required();
  add_problem_options(result_cmd, res.problem);
  result_cmd->add_option("--top", res.top, "rows flagged as solutions");
  result_cmd->add_option("--dot", res.dot, "write the best solution as a DOT graph");
  result_cmd->add_option("--hist", res.hist, "write the ranked histogram as CSV");

  BenchConfig bench;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "compile random graphs and record circuit metrics");
  bench_cmd->add_option("--n", bench.sizes, "node counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--d", bench.densities, "edge densities")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--p", bench.depths, "QAOA depths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads)->capture_default_str();
  bench_cmd->add_option("--csv", bench_csv, "output file (default stdout)");

  std::size_t max_len = 0, beam = 64;
  bool exhaustive = false;
  auto* chains_cmd = app.add_subcommand("chains", "print the subchain library of --calib");
  chains_cmd->add_option("--max-len", max_len, "longest chain (default: qubit count)");
  chains_cmd->add_option("--beam", beam)->check(CLI::PositiveNumber)->capture_default_str();
  chains_cmd->add_flag("--exhaustive", exhaustive, "enumerate every simple path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(g, solve);
    if (*compile_cmd) return run_compile(g, comp);
    if (*submit_cmd) return run_submit(g, sub);
    if (*status_cmd) return run_status(g, status_id);
    if (*result_cmd) return run_result(g, res);
    if (*bench_cmd) return run_bench_cmd(g, bench, bench_csv);
    if (*chains_cmd) return run_chains(g, max_len, beam, exhaustive);
  } catch (const NotFoundError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNotFound;
  } catch (const UnavailableError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUnavailable;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
