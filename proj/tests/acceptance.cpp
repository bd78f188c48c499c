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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "qaoachain/bench.hpp"
#include "qaoachain/compiler.hpp"
#include "qaoachain/hardware.hpp"
#include "qaoachain/optimizer.hpp"
#include "qaoachain/problem_model.hpp"
#include "qaoachain/qaoa.hpp"
#include "qaoachain/qasm.hpp"
#include "qaoachain/simulator.hpp"
#include "qaoachain/task_service.hpp"

using namespace qaoachain;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    out.ok = false;
    out.detail += " [over time budget " + std::to_string(budget_s) + " s]";
  }
  failures += !out.ok;
  std::printf("%s %2d %-34s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<int> iota_chain(std::size_t n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

QaoaParams random_params(std::size_t p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-std::numbers::pi, std::numbers::pi);
  std::vector<double> g(p), b(p);
  for (auto& x : g) x = a(rng);
  for (auto& x : b) x = a(rng);
  return QaoaParams(g, b);
}

// ---------------------------------------------------------------- 1, 2

Outcome template_law() {
  for (std::size_t n = 2; n <= 40; ++n) {
    const std::size_t want = n % 2 == 0 ? 2 * n - 2 : 2 * n - 1;
    const std::size_t got = build_template(n).cycle_count();
    if (got != want) return {false, "n=" + std::to_string(n) + " gives " + std::to_string(got)};
  }
  return {true, "n = 2..40"};
}

Outcome pair_completeness() {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto t = build_template(n);
    std::vector<std::size_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& layer : t.layers()) {
      for (auto [a, b] : layer.pairs) {
        if (b != a + 1) return {false, "non-adjacent pair in template"};
        if (is_rzz_layer(layer.kind)) {
          ++seen[std::minmax(at[a], at[b])];
        } else {
          std::swap(at[a], at[b]);
        }
      }
    }
    if (seen.size() != n * (n - 1) / 2) return {false, "n=" + std::to_string(n) + " misses pairs"};
    for (const auto& [pair, count] : seen)
      if (count != 1) return {false, "n=" + std::to_string(n) + " repeats a pair"};
  }
  return {true, "n = 2..12, every pair once"};
}

// ---------------------------------------------------------------- 3

Outcome compiled_correctness() {
  std::mt19937_64 rng(3003);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto g = oracle::random_weight_graph(n, 0.6, t % 2 == 0, rng);
    const auto p = random_params(1 + t % 2, rng);
    const auto pc = compile(g, p, iota_chain(n)).circuit;
    const auto compiled = simulate(pc.num_qubits, pc.gates());
    std::vector<std::complex<double>> amps(compiled.amplitudes().begin(), compiled.amplitudes().end());
    const auto reference = oracle::simulate(n, build_qaoa_circuit(g, p).gates());
    worst = std::max(worst, oracle::phase_distance(oracle::unpermute(amps, pc.final_layout), reference));
  }
  return {worst < 1e-9, "50 graphs, max amplitude error " + fmt("%.2e", worst)};
}

// ---------------------------------------------------------------- 4

Outcome decomposition_oracle() {
  std::mt19937_64 rng(4004);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  double worst = 0, worst_oracle = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 11;
    const auto g = oracle::random_weight_graph(n, density(rng), t % 3 != 0, rng);
    const auto p = random_params(1 + t % 2, rng);
    const double dec = expectation_decomposed(g, p, 1);
    worst = std::max(worst, std::abs(dec - expectation_full(g, p)));
    const auto psi = oracle::simulate(n, build_qaoa_circuit(g, p).gates());
    worst_oracle = std::max(worst_oracle, std::abs(dec - oracle::expectation(g, psi)));
  }
  return {worst < 1e-9 && worst_oracle < 1e-9,
          "200 graphs, |dec - full| " + fmt("%.2e", worst) + ", vs dense oracle " + fmt("%.2e", worst_oracle)};
}

// ---------------------------------------------------------------- 5

// f(x) from the stored entries against Σ J s s + Σ h s + offset from the
// model fields, for every x.
double ising_gap(const QuboMatrix& q) {
  const auto m = ising_from_qubo(q);
  const std::size_t n = q.size();
  double worst = 0;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    double f = q.offset();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((x >> i) & 1 && (x >> j) & 1) f += q.at(i, j);
    auto s = [&](std::size_t i) { return ((x >> i) & 1) ? 1.0 : -1.0; };
    double h = m.offset;
    for (const auto& [key, J] : m.j) h += J * s(key.first) * s(key.second);
    for (std::size_t i = 0; i < n; ++i) h += m.h[i] * s(i);
    worst = std::max(worst, std::abs(f - h));
  }
  return worst;
}

Outcome qubo_ising() {
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> u(0, 1);
  auto random_graph_of = [&](std::size_t n, double d, bool weighted) {
    ProblemGraph g{n, {}};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (u(rng) < d) g.edges.push_back({a, b, weighted ? 0.5 + u(rng) : 1.0});
    if (g.edges.empty()) g.edges.push_back({0, n - 1, 1.0});
    return g;
  };
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 11;
    worst = std::max(worst, ising_gap(qubo_from_maxcut(random_graph_of(n, 0.5, t % 2 == 0))));

    std::vector<std::int64_t> nums(1 + t % 12);
    for (auto& a : nums) a = 1 + static_cast<std::int64_t>(rng() % 50);
    worst = std::max(worst, ising_gap(qubo_from_number_partition(nums)));

    const std::size_t colors = 1 + t % 3;
    const std::size_t nodes = std::max<std::size_t>(1, 12 / colors - t % 2);
    worst = std::max(worst, ising_gap(qubo_from_graph_coloring(random_graph_of(nodes, 0.4, false), colors)));

    std::vector<std::vector<std::size_t>> sets(1 + t % 12);
    for (auto& s : sets) {
      for (std::size_t e = 0; e < 8; ++e)
        if (u(rng) < 0.3) s.push_back(e);
    }
    worst = std::max(worst, ising_gap(qubo_from_set_packing(8, sets, 1.5 + u(rng))));
  }
  return {worst <= 1e-12, "4 builders x 100 instances, max absolute gap " + fmt("%.2e", worst)};
}

// ---------------------------------------------------------------- 6

Outcome fig5_end_to_end() {
  const ProblemGraph problem{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 4}, {1, 3}}};
  const auto qubo = qubo_from_maxcut(problem);
  const auto g = weight_graph_from_ising(ising_from_qubo(qubo));

  // brute-force max cut, partitions written with node 0 on side 0
  auto cut = [&](std::size_t x) {
    int c = 0;
    for (const auto& e : problem.edges) c += ((x >> e.u) & 1) != ((x >> e.v) & 1);
    return c;
  };
  auto canonical = [](std::size_t x) { return (x & 1) ? (~x & 63) : x; };
  int best = 0;
  for (std::size_t x = 0; x < 64; ++x) best = std::max(best, cut(x));
  std::set<std::size_t> optimal;
  for (std::size_t x = 0; x < 64; ++x)
    if (cut(x) == best) optimal.insert(canonical(x));

  auto run_once = [&](const std::filesystem::path& store) {
    OptimizeOptions opt;
    opt.seed = 2023;
    const auto solved = optimize(g, opt);
    const auto chip = load_calibration(QAOACHAIN_FIXTURES "/chip_line18.json");
    const auto chain = select_subchain(build_subchain_library(chip, 18), 6);
    const auto compiled = compile(g, solved.params, chain.qubits);
    TaskService service(store);
    const auto record = service.submit_and_wait(emit_qasm(compiled.circuit), 10000, "fig5", 2023);
    return std::make_pair(solved.energy, process_results(record.counts, g, 2, qubo.sense()));
  };
  const auto dir = std::filesystem::temp_directory_path() / "qaoachain_acceptance_fig5";
  std::filesystem::remove_all(dir);
  const auto [energy, rows] = run_once(dir / "a");
  const auto [energy2, rows2] = run_once(dir / "b");
  std::filesystem::remove_all(dir);

  std::set<std::size_t> found;
  const double lowest = rows.front().energy;
  bool cuts_ok = true;
  for (const auto& r : rows) {
    if (r.energy != lowest) break;
    std::size_t x = 0;
    for (std::size_t l = 0; l < 6; ++l) x |= static_cast<std::size_t>(r.bits[l] == '1') << l;
    found.insert(canonical(x));
    cuts_ok = cuts_ok && cut(x) == 6 && r.objective == 6.0;
  }
  for (int i = 0; i < 2; ++i) {
    std::size_t x = 0;
    for (std::size_t l = 0; l < 6; ++l) x |= static_cast<std::size_t>(rows[i].bits[l] == '1') << l;
    cuts_ok = cuts_ok && cut(x) == 6;
  }
  bool same = energy == energy2 && rows.size() == rows2.size();
  for (std::size_t i = 0; same && i < rows.size(); ++i) same = rows[i].bits == rows2[i].bits && rows[i].count == rows2[i].count;
  const bool ok = best == 6 && found == optimal && optimal.size() == 2 && cuts_ok && same;
  return {ok, "E_1 = " + fmt("%.6f", energy) + ", top rows " + rows[0].bits + " " + rows[1].bits + ", " +
                  std::to_string(found.size()) + " optimal partitions sampled" + (same ? "" : ", NOT deterministic")};
}

// ---------------------------------------------------------------- 7

Outcome mapping_fidelity() {
  std::mt19937_64 rng(7007);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  int mismatches = 0, small = 0, within = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 9;
    const auto g = oracle::random_weight_graph(n, density(rng), false, rng);
    const auto res = search_initial_mapping(g, n);
    const auto sc = schedule(g, res.mapping, random_params(1, rng));
    // realized cycle read off the schedule itself
    std::size_t realized = 0;
    for (const auto& layer : sc.layers)
      if (layer.block == 1 && layer.kind == StepKind::kRzz && !layer.gates.empty()) realized = std::max(realized, layer.cycle);
    mismatches += realized != res.last_rzz_cycle;
    if (n <= 7) {
      ++small;
      const auto exer = build_exer_table(n);
      Mapping m{std::vector<std::size_t>(n), n};
      std::iota(m.position_of.begin(), m.position_of.end(), 0);
      std::size_t best = SIZE_MAX;
      do best = std::min(best, mapping_cost(g, m, exer));
      while (std::next_permutation(m.position_of.begin(), m.position_of.end()));
      within += res.last_rzz_cycle <= best + 2;
    }
  }
  const double rate = static_cast<double>(within) / small;
  return {mismatches == 0 && rate >= 0.9, std::to_string(mismatches) + " prediction mismatches / 100; within 2 of optimum on " +
                                              fmt("%.1f", 100 * rate) + "% of " + std::to_string(small)};
}

// ---------------------------------------------------------------- 8

void dfs_best(const ChipModel& chip, std::vector<int>& path, double f, std::map<std::size_t, double>& best) {
  if (path.size() >= 2) best[path.size()] = std::max(best[path.size()], f);
  for (int next : chip.neighbours(path.back())) {
    if (std::find(path.begin(), path.end(), next) != path.end()) continue;
    path.push_back(next);
    dfs_best(chip, path, f * chip.coupler_fidelity(path[path.size() - 2], next), best);
    path.pop_back();
  }
}

Outcome subchain_oracle() {
  std::mt19937_64 rng(8008);
  std::uniform_real_distribution<double> fid(0.85, 0.99);
  int mismatches = 0, keys = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3 + t % 8;
    std::vector<QubitCalibration> qubits;
    for (std::size_t i = 0; i < n; ++i) qubits.push_back({static_cast<int>(i), 30, 4, 0.99});
    std::vector<CouplerCalibration> couplers;
    std::set<std::pair<int, int>> have;
    std::vector<int> degree(n, 0);
    auto add = [&](int a, int b) {
      if (a == b || degree[a] >= 4 || degree[b] >= 4 || !have.insert(std::minmax(a, b)).second) return;
      ++degree[a];
      ++degree[b];
      couplers.push_back({a, b, fid(rng)});
    };
    for (std::size_t i = 1; i < n; ++i) add(static_cast<int>(i), static_cast<int>(rng() % i));
    for (std::size_t e = 0; e < n; ++e) add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const ChipModel chip(qubits, couplers);

    const auto lib = build_subchain_library(chip, n);
    std::map<std::size_t, double> best;
    for (const auto& q : chip.qubits()) {
      std::vector<int> path{q.id};
      dfs_best(chip, path, 1.0, best);
    }
    for (std::size_t k = 2; k <= n; ++k) {
      ++keys;
      const bool exists = best.count(k) > 0;
      // Products taken in a different order may differ in the last bit.
      if (exists != !lib.at(k).empty() || (exists && std::abs(lib.at(k).front().fidelity - best[k]) > 1e-12 * best[k])) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatched heads over " + std::to_string(keys) + " keys (rel. tol 1e-12)"};
}

// ---------------------------------------------------------------- 9

Outcome bench_trends() {
  BenchConfig lin;
  lin.sizes = {10, 20, 30, 40};
  lin.densities = {0.8};
  lin.reps = 20;
  lin.seed = 9;
  const auto lin_means = bench_means(run_bench(lin));
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& m : lin_means) {
    const double x = static_cast<double>(m.n), y = m.depth_pre;
    sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y;
  }
  const double k = static_cast<double>(lin_means.size());
  const double cov = sxy - sx * sy / k, vx = sxx - sx * sx / k, vy = syy - sy * sy / k;
  const double r2 = cov * cov / (vx * vy);

  BenchConfig sweep;
  sweep.sizes = {100};
  sweep.densities = {0.2, 0.4, 0.6, 0.8, 1.0};
  sweep.reps = 20;
  sweep.seed = 9;
  const auto sweep_means = bench_means(run_bench(sweep));
  bool monotone = true;
  std::string post;
  for (std::size_t i = 0; i < sweep_means.size(); ++i) {
    post += (i ? "," : "") + fmt("%.1f", sweep_means[i].depth_post);
    if (i && sweep_means[i].depth_post < sweep_means[i - 1].depth_post) monotone = false;
  }
  const bool law = sweep_means.back().depth_pre == 198.0;
  return {r2 >= 0.99 && monotone && law, "R^2 = " + fmt("%.5f", r2) + "; n=100 depth_post " + post +
                                             "; d=1 depth_pre " + fmt("%.0f", sweep_means.back().depth_pre) + " (law 198)"};
}

// ---------------------------------------------------------------- 10

Outcome qasm_round_trip() {
  std::mt19937_64 rng(1010);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 11;
    const auto g = oracle::random_weight_graph(n, 0.5, t % 2 == 0, rng);
    const auto pc = compile(g, random_params(1 + t % 2, rng), iota_chain(n)).circuit;
    const auto back = parse_qasm(emit_qasm(pc));
    bad += !(back.gates() == pc.gates() && back.cycles == pc.cycles && back.final_layout == pc.final_layout &&
             back.num_qubits == pc.num_qubits);
  }
  return {bad == 0, std::to_string(bad) + " of 100 circuits differ after parse(emit(c))"};
}

}  // namespace

int main() {
  std::printf("simd kernels: %s\n", std::string(simd::active_kernels().name).c_str());
  criterion(1, "template layer law", 1, template_law);
  criterion(2, "template pair completeness", 1, pair_completeness);
  criterion(3, "compiled circuit correctness", 30, compiled_correctness);
  criterion(4, "light-cone decomposition", 60, decomposition_oracle);
  criterion(5, "QUBO/Ising equivalence", 30, qubo_ising);
  criterion(6, "end-to-end max-cut reproduction", 60, fig5_end_to_end);
  criterion(7, "mapping cost fidelity", 120, mapping_fidelity);
  criterion(8, "subchain oracle", 30, subchain_oracle);
  criterion(9, "benchmark trends", 600, bench_trends);
  criterion(10, "QASM round trip", 10, qasm_round_trip);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
