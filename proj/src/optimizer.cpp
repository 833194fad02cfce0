// Copyright 2026 The QuaSiMo Authors
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


#include "quasimo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quasimo/error.hpp"
#include "quasimo/simulator.hpp"

namespace quasimo {

namespace {

struct BudgetExhausted {};

// Counts calls, keeps the best point and refuses to exceed the budget.
class Tracker {
 public:
  Tracker(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    if (result_.evaluations_used >= budget_) throw BudgetExhausted{};
    const double v = f_(x);
    result_.trace.emplace_back(result_.evaluations_used, v);
    ++result_.evaluations_used;
    if (result_.evaluations_used == 1 || v < result_.best_value) {
      result_.best_value = v;
      result_.best_params = x;
    }
    return v;
  }

  std::size_t remaining() const { return budget_ - result_.evaluations_used; }
  OptResult take() { return std::move(result_); }

 private:
  const Objective& f_;
  std::size_t budget_;
  OptResult result_;
};

void require_dim(const std::vector<double>& x0) {
  if (x0.empty()) throw Error(ErrorCode::InvalidArgument, "optimizer needs at least one parameter");
}

}  // namespace

OptResult spsa_minimize(const Objective& f, std::vector<double> x0, std::size_t budget,
                        std::uint64_t seed, const SpsaSettings& s) {
  require_dim(x0);
  const std::size_t dim = x0.size();
  const std::size_t needed = 1 + 2 * s.calibration_pairs + 2 * dim;
  if (budget < needed) {
    throw Error(ErrorCode::BudgetTooSmall, "SPSA needs a budget of at least " +
                                               std::to_string(needed) + ", got " +
                                               std::to_string(budget));
  }
  Tracker eval(f, budget);
  Rng rng(seed);
  std::vector<double> x = std::move(x0);
  std::vector<double> delta(dim), plus(dim), minus(dim);

  auto perturb = [&](double ck) {
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = rng.rademacher();
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
  };

  eval(x);

  double magnitude = 0.0;
  for (std::size_t k = 0; k < s.calibration_pairs; ++k) {
    perturb(s.c);
    magnitude += std::abs(eval(plus) - eval(minus)) / (2.0 * s.c);
  }
  magnitude /= static_cast<double>(std::max<std::size_t>(s.calibration_pairs, 1));
  double a = s.target_step * std::pow(s.big_a + 1.0, s.alpha);
  if (magnitude > 1e-12) a /= magnitude;

  for (std::size_t k = 0; eval.remaining() >= 2; ++k) {
    const double kk = static_cast<double>(k);
    const double ak = a / std::pow(s.big_a + kk + 1.0, s.alpha);
    const double ck = s.c / std::pow(kk + 1.0, s.gamma);
    perturb(ck);
    const double fp = eval(plus);
    const double fm = eval(minus);
    const double g = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < dim; ++i) x[i] -= ak * g * delta[i];
  }
  if (eval.remaining() >= 1) eval(x);
  return eval.take();
}

OptResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, std::size_t budget,
                               double tolerance, std::optional<double> initial_step) {
  require_dim(x0);
  if (budget == 0) throw Error(ErrorCode::BudgetTooSmall, "Nelder-Mead needs a budget >= 1");
  const std::size_t n = x0.size();
  Tracker eval(f, budget);
  std::vector<std::vector<double>> pts;
  std::vector<double> vals;

  try {
    pts.push_back(x0);
    vals.push_back(eval(x0));
    for (std::size_t i = 0; i < n; ++i) {
      auto p = x0;
      p[i] += initial_step ? *initial_step : (x0[i] == 0.0 ? 0.00025 : 0.1);
      pts.push_back(p);
      vals.push_back(eval(p));
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto affine = [&](std::vector<double>& out, const std::vector<double>& from,
                      const std::vector<double>& to, double t) {
      for (std::size_t i = 0; i < n; ++i) out[i] = from[i] + t * (to[i] - from[i]);
    };

    while (true) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t i, std::size_t j) { return vals[i] < vals[j]; });
      {
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (auto i : order) {
          p2.push_back(pts[i]);
          v2.push_back(vals[i]);
        }
        pts.swap(p2);
        vals.swap(v2);
      }
      if (vals[n] - vals[0] < tolerance) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[j][i] / static_cast<double>(n);
      }
      const auto& worst = pts[n];
      affine(xr, centroid, worst, -1.0);
      const double fr = eval(xr);
      if (fr < vals[0]) {
        affine(xe, centroid, worst, -2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          pts[n] = xe;
          vals[n] = fe;
        } else {
          pts[n] = xr;
          vals[n] = fr;
        }
        continue;
      }
      if (fr < vals[n - 1]) {
        pts[n] = xr;
        vals[n] = fr;
        continue;
      }
      bool shrink = false;
      if (fr < vals[n]) {
        affine(xc, centroid, xr, 0.5);
        const double fc = eval(xc);
        if (fc <= fr) {
          pts[n] = xc;
          vals[n] = fc;
        } else {
          shrink = true;
        }
      } else {
        affine(xc, centroid, worst, 0.5);
        const double fc = eval(xc);
        if (fc < vals[n]) {
          pts[n] = xc;
          vals[n] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t j = 1; j <= n; ++j) {
          affine(pts[j], pts[0], pts[j], 0.5);
          vals[j] = eval(pts[j]);
        }
      }
    }
  } catch (const BudgetExhausted&) {
  }
  return eval.take();
}

namespace {

class SpsaOptimizer final : public Optimizer {
 public:
  SpsaOptimizer(std::size_t budget, SpsaSettings s) : budget_(budget), settings_(s) {}
  std::string name() const override { return "spsa"; }
  std::size_t budget() const override { return budget_; }
  OptResult minimize(const Objective& f, std::vector<double> x0,
                     std::uint64_t seed) const override {
    return spsa_minimize(f, std::move(x0), budget_, seed, settings_);
  }

 private:
  std::size_t budget_;
  SpsaSettings settings_;
};

class NelderMeadOptimizer final : public Optimizer {
 public:
  NelderMeadOptimizer(std::size_t budget, double tol, std::optional<double> step)
      : budget_(budget), tol_(tol), step_(step) {}
  std::string name() const override { return "nelder-mead"; }
  std::size_t budget() const override { return budget_; }
  OptResult minimize(const Objective& f, std::vector<double> x0,
                     std::uint64_t) const override {
    return nelder_mead_minimize(f, std::move(x0), budget_, tol_, step_);
  }

 private:
  std::size_t budget_;
  double tol_;
  std::optional<double> step_;
};

}  // namespace

std::shared_ptr<const Optimizer> create_optimizer(std::string_view name, const Options& options) {
  std::string algo(name);
  if (algo == "nlopt") {
    options.require_known({"algorithm", "budget", "tolerance", "c", "A", "step"}, "optimizer 'nlopt'");
    algo = options.get_string("algorithm", "nelder-mead");
  } else {
    options.require_known({"budget", "tolerance", "c", "A", "step"}, "optimizer '" + algo + "'");
  }
  const auto budget = options.get_int("budget", 200);
  if (budget < 1) throw Error(ErrorCode::BadConfig, "option 'budget' must be >= 1");
  if (algo == "spsa") {
    SpsaSettings s;
    s.c = options.get_double("c", s.c);
    s.big_a = options.get_double("A", s.big_a);
    return std::make_shared<SpsaOptimizer>(static_cast<std::size_t>(budget), s);
  }
  if (algo == "nelder-mead") {
    std::optional<double> step;
    if (options.has("step")) {
      step = options.get_double("step", 0.0);
      if (!(*step > 0.0)) throw Error(ErrorCode::BadConfig, "option 'step' must be > 0");
    }
    return std::make_shared<NelderMeadOptimizer>(static_cast<std::size_t>(budget),
                                                 options.get_double("tolerance", 1e-8), step);
  }
  throw Error(ErrorCode::UnknownOptimizer, "unknown optimizer '" + algo + "'");
}

}  // namespace quasimo
