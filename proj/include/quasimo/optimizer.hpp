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


#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasimo/options.hpp"

namespace quasimo {

using Objective = std::function<double(std::span<const double>)>;

struct OptResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  /// (evaluation index, value) for every objective call, in call order.
  std::vector<std::pair<std::size_t, double>> trace;
  std::size_t evaluations_used = 0;
};

struct SpsaSettings {
  double c = 0.2;
  double big_a = 0.0;
  double alpha = 0.602;
  double gamma = 0.101;
  std::size_t calibration_pairs = 25;
  double target_step = 0.6283185307179586;  // 2 pi / 10
};

/// Calls f(x0), calibrates `a` from probe pairs, then iterates while two
/// evaluations remain; a last spare evaluation goes to the final iterate.
/// Throws BudgetTooSmall when budget < 1 + 2 * calibration_pairs + 2 * dim.
OptResult spsa_minimize(const Objective& f, std::vector<double> x0, std::size_t budget,
                        std::uint64_t seed, const SpsaSettings& settings = {});

/// Downhill simplex with coefficients (1, 2, 0.5, 0.5). Stops once the
/// simplex value spread drops below `tolerance` or the budget is spent.
/// Initial vertices offset one coordinate each by `initial_step`, or by 0.1
/// (0.00025 for zero coordinates) when unset.
OptResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, std::size_t budget,
                               double tolerance = 1e-8,
                               std::optional<double> initial_step = std::nullopt);

class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual std::string name() const = 0;
  virtual std::size_t budget() const = 0;
  /// `seed` feeds stochastic methods and is ignored otherwise.
  virtual OptResult minimize(const Objective& f, std::vector<double> x0,
                             std::uint64_t seed) const = 0;
};

/**
 * Lookup by name: "spsa", "nelder-mead", or "nlopt" with an "algorithm" of
 * either. Recognized options: "budget" (default 200), "tolerance"
 * (Nelder-Mead, default 1e-8), "step" (Nelder-Mead initial simplex size),
 * "c" and "A" (SPSA gains). Throws
 * UnknownOptimizer or BadConfig.
 */
std::shared_ptr<const Optimizer> create_optimizer(std::string_view name,
                                                  const Options& options = {});

}  // namespace quasimo
