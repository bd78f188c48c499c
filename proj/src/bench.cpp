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

#include "qaoachain/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>
#include <tuple>

#include "qaoachain/compiler.hpp"
#include "qaoachain/errors.hpp"

namespace qaoachain {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string real(double x, const char* fmt = "%.17g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

WeightGraph random_graph(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw ConfigError("graph needs at least one node");
  if (!(density >= 0.0 && density <= 1.0)) throw ConfigError("edge density must lie in [0, 1]");
  std::vector<WeightedEdge> all;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) all.push_back({u, v, 1.0});
  }
  const auto m = static_cast<std::size_t>(std::floor(density * static_cast<double>(all.size()) + 1e-9));
  // Partial Fisher–Yates with an explicit draw so the result does not
  // depend on the standard library's shuffle.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(m);
  return WeightGraph(std::vector<double>(n, 0.0), std::move(all));
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, double density, std::size_t rep) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ n);
  h = splitmix(h ^ static_cast<std::uint64_t>(std::llround(density * 1e6)));
  return splitmix(h ^ rep);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.reps < 1) throw ConfigError("reps must be at least 1");
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    for (double d : config.densities) {
      for (std::size_t p : config.depths) {
        if (p < 1) throw ConfigError("QAOA depth must be at least 1");
        for (std::size_t rep = 0; rep < config.reps; ++rep) rows.push_back({n, d, p, rep});
      }
    }
  }

  // Angles only change gate parameters, not structure.
  auto run_cell = [&](BenchRow& row) {
    const WeightGraph g = random_graph(row.n, row.d, cell_seed(config.seed, row.n, row.d, row.rep));
    const QaoaParams params(std::vector<double>(row.p, 0.4), std::vector<double>(row.p, 0.3));
    std::vector<int> chain(row.n);
    std::iota(chain.begin(), chain.end(), 0);
    const auto start = std::chrono::steady_clock::now();
    const CompileResult res = compile(g, params, chain);
    const auto stop = std::chrono::steady_clock::now();
    row.compile_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    row.depth_pre = res.template_cycles;
    row.depth_post = res.circuit.depth();
    row.cnot_count = res.circuit.cnot_count();
  };

  const unsigned threads = std::max(1U, config.threads);
  if (threads == 1) {
    for (auto& row : rows) run_cell(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rows.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
          try {
            run_cell(rows[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<BenchMean> bench_means(const std::vector<BenchRow>& rows) {
  std::vector<BenchMean> means;
  std::vector<std::size_t> counts;
  for (const auto& r : rows) {
    if (means.empty() || means.back().n != r.n || means.back().d != r.d || means.back().p != r.p) {
      means.push_back({r.n, r.d, r.p});
      counts.push_back(0);
    }
    auto& m = means.back();
    m.compile_ms += r.compile_ms;
    m.depth_pre += static_cast<double>(r.depth_pre);
    m.depth_post += static_cast<double>(r.depth_post);
    m.cnot_count += static_cast<double>(r.cnot_count);
    ++counts.back();
  }
  for (std::size_t i = 0; i < means.size(); ++i) {
    const auto k = static_cast<double>(counts[i]);
    means[i].compile_ms /= k;
    means[i].depth_pre /= k;
    means[i].depth_post /= k;
    means[i].cnot_count /= k;
  }
  return means;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,d,p,rep,compile_ms,depth_pre,depth_post,cnot_count\n";
  for (const auto& r : rows) {
    out << r.n << ',' << real(r.d, "%g") << ',' << r.p << ',' << r.rep << ',' << real(r.compile_ms, "%.3f") << ','
        << r.depth_pre << ',' << r.depth_post << ',' << r.cnot_count << '\n';
  }
  for (const auto& m : bench_means(rows)) {
    out << m.n << ',' << real(m.d, "%g") << ',' << m.p << ",mean," << real(m.compile_ms, "%.3f") << ','
        << real(m.depth_pre) << ',' << real(m.depth_post) << ',' << real(m.cnot_count) << '\n';
  }
}

}  // namespace qaoachain
