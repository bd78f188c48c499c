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

#include "qaoachain/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "qaoachain/errors.hpp"

namespace qaoachain {

QaoaParams interp_initialize(const QaoaParams& previous) {
  const std::size_t p = previous.depth();
  if (p == 0) throw ConfigError("interp initialization needs at least one layer");
  auto lift = [p](const std::vector<double>& x) {
    std::vector<double> out(p + 1, 0.0);
    const double dp = static_cast<double>(p);
    for (std::size_t i = 1; i <= p + 1; ++i) {
      const double left = i >= 2 ? x[i - 2] : 0.0;
      const double here = i <= p ? x[i - 1] : 0.0;
      out[i - 1] = (static_cast<double>(i - 1) / dp) * left + (static_cast<double>(p - i + 1) / dp) * here;
    }
    return out;
  };
  return QaoaParams(lift(previous.gamma), lift(previous.beta));
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          double step, std::size_t max_evaluations, double tolerance) {
  const std::size_t dim = x0.size();
  SimplexResult result;
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> vals(dim + 1, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += step;

  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };
  for (std::size_t i = 0; i <= dim && result.evaluations < max_evaluations; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> v2;
    for (auto k : order) {
      p2.push_back(pts[k]);
      v2.push_back(vals[k]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };

  auto converged = [&] {
    double spread_x = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t d = 0; d < dim; ++d) spread_x = std::max(spread_x, std::abs(pts[i][d] - pts[0][d]));
    }
    return std::abs(vals[dim] - vals[0]) <= tolerance && spread_x <= std::sqrt(tolerance);
  };

  auto affine = [&](const std::vector<double>& centroid, const std::vector<double>& worst, double t) {
    std::vector<double> x(dim);
    for (std::size_t d = 0; d < dim; ++d) x[d] = centroid[d] + t * (worst[d] - centroid[d]);
    return x;
  };

  if (result.evaluations > dim) {
    sort_simplex();
    while (!converged()) {
      if (result.evaluations + 2 > max_evaluations) break;
      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t d = 0; d < dim; ++d) centroid[d] += pts[i][d] / static_cast<double>(dim);
      }
      const auto xr = affine(centroid, pts[dim], -1.0);
      const double fr = eval(xr);
      if (fr < vals[0]) {
        const auto xe = affine(centroid, pts[dim], -2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          pts[dim] = xe;
          vals[dim] = fe;
        } else {
          pts[dim] = xr;
          vals[dim] = fr;
        }
      } else if (fr < vals[dim - 1]) {
        pts[dim] = xr;
        vals[dim] = fr;
      } else {
        const bool outside = fr < vals[dim];
        const auto xc = outside ? affine(centroid, pts[dim], -0.5) : affine(centroid, pts[dim], 0.5);
        const double fc = eval(xc);
        if (fc < (outside ? fr : vals[dim])) {
          pts[dim] = xc;
          vals[dim] = fc;
        } else {
          if (result.evaluations + dim > max_evaluations) break;
          for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t d = 0; d < dim; ++d) pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
            vals[i] = eval(pts[i]);
          }
        }
      }
      sort_simplex();
    }
    result.converged = converged();
  }
  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  result.x = pts[best];
  result.value = vals[best];
  return result;
}

namespace {

// Portable uniform in [0, 1): the 53 high bits of one engine draw.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

class Objective {
 public:
  Objective(const WeightGraph& g, const OptimizeOptions& opt, std::vector<TraceRow>& trace)
      : g_(g), opt_(opt), trace_(trace) {}

  double operator()(const QaoaParams& params) {
    const double e = opt_.use_decomposition ? expectation_decomposed(g_, params, opt_.threads)
                                            : expectation_full(g_, params);
    trace_.push_back({trace_.size(), params, e});
    return e;
  }

 private:
  const WeightGraph& g_;
  const OptimizeOptions& opt_;
  std::vector<TraceRow>& trace_;
};

QaoaParams unflatten(std::span<const double> x) {
  const std::size_t p = x.size() / 2;
  return QaoaParams(std::vector<double>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)),
                    std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(p), x.end()));
}

std::vector<double> flatten(const QaoaParams& params) {
  std::vector<double> x = params.gamma;
  x.insert(x.end(), params.beta.begin(), params.beta.end());
  return x;
}

struct Stage {
  QaoaParams params;
  double energy;
  bool converged;
};

Stage refine(Objective& objective, const QaoaParams& start, const OptimizeOptions& opt) {
  const auto r = nelder_mead([&](std::span<const double> x) { return objective(unflatten(x)); }, flatten(start),
                             opt.initial_step, opt.max_evaluations, opt.tolerance);
  return {unflatten(r.x), r.value, r.converged};
}

Stage grid_then_refine(Objective& objective, const OptimizeOptions& opt) {
  if (opt.grid_gamma_points == 0 || opt.grid_beta_points == 0) throw ConfigError("grid needs at least one point per axis");
  QaoaParams best({0.0}, {0.0});
  double best_e = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < opt.grid_gamma_points; ++i) {
    const double gamma = opt.gamma_max * static_cast<double>(i) / static_cast<double>(opt.grid_gamma_points);
    for (std::size_t j = 0; j < opt.grid_beta_points; ++j) {
      const double beta = opt.beta_max * static_cast<double>(j) / static_cast<double>(opt.grid_beta_points);
      QaoaParams p({gamma}, {beta});
      const double e = objective(p);
      if (e < best_e) {
        best_e = e;
        best = p;
      }
    }
  }
  auto refined = refine(objective, best, opt);
  if (refined.energy > best_e) return {best, best_e, refined.converged};
  return refined;
}

}  // namespace

OptimizeResult optimize(const WeightGraph& g, const OptimizeOptions& opt) {
  if (opt.depth == 0) throw ConfigError("QAOA depth must be at least 1");
  if (opt.optimizer == OptimizerKind::kGrid && opt.depth != 1 && opt.init != InitStrategy::kInterpChain) {
    throw ConfigError("grid search is only available for p = 1; use simplex or the interp chain");
  }

  OptimizeResult result;
  Objective objective(g, opt, result.trace);

  QaoaParams start;
  switch (opt.init) {
    case InitStrategy::kGiven:
      if (!opt.initial) throw ConfigError("initial parameters required");
      if (opt.initial->depth() != opt.depth) throw ConfigError("initial parameters have the wrong depth");
      start = *opt.initial;
      break;
    case InitStrategy::kRandom: {
      if (!opt.seed) throw ConfigError("random initialization requires a seed");
      std::mt19937_64 rng(*opt.seed);
      std::vector<double> gamma(opt.depth), beta(opt.depth);
      for (std::size_t k = 0; k < opt.depth; ++k) {
        gamma[k] = opt.gamma_max * unit_uniform(rng);
        beta[k] = opt.beta_max * unit_uniform(rng);
      }
      start = QaoaParams(std::move(gamma), std::move(beta));
      break;
    }
    case InitStrategy::kInterpChain:
      start = QaoaParams(std::vector<double>(opt.depth, 0.0), std::vector<double>(opt.depth, 0.0));
      break;
  }

  if (g.is_trivial()) {
    result.params = start;
    result.energy = objective(start);
    result.converged = true;
    return result;
  }

  Stage stage{start, 0.0, false};
  if (opt.init == InitStrategy::kInterpChain) {
    stage = grid_then_refine(objective, opt);
    while (stage.params.depth() < opt.depth) stage = refine(objective, interp_initialize(stage.params), opt);
  } else if (opt.optimizer == OptimizerKind::kGrid) {
    stage = grid_then_refine(objective, opt);
  } else {
    stage = refine(objective, start, opt);
  }
  result.params = stage.params;
  result.energy = stage.energy;
  result.converged = stage.converged;
  return result;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  std::size_t p = 0;
  for (const auto& row : trace) p = std::max(p, row.params.depth());
  out << "eval";
  for (std::size_t k = 1; k <= p; ++k) out << ",gamma_" << k;
  for (std::size_t k = 1; k <= p; ++k) out << ",beta_" << k;
  out << ",energy\n";
  char buf[40];
  auto real = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  };
  for (const auto& row : trace) {
    out << row.evaluation;
    for (std::size_t k = 0; k < p; ++k) out << ',' << (k < row.params.depth() ? real(row.params.gamma[k]) : "");
    for (std::size_t k = 0; k < p; ++k) out << ',' << (k < row.params.depth() ? real(row.params.beta[k]) : "");
    out << ',' << real(row.energy) << '\n';
  }
}

}  // namespace qaoachain
