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
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace quasimo {

using Trace = std::vector<std::pair<std::size_t, double>>;
using GateStats = std::map<std::string, std::size_t>;
using ResultValue = std::variant<double, std::vector<double>, Trace, GateStats>;

/**
 * Keyed workflow output. Canonical keys: "energy" (double), "exp-vals" and
 * "opt-params" (vector<double>), "trace" (Trace), "final-circuit-stats"
 * (GateStats).
 */
class WorkflowResult {
 public:
  void set(const std::string& key, ResultValue value) { values_[key] = std::move(value); }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, ResultValue>& values() const { return values_; }

  /// Throws MissingKey when absent or of another type.
  template <typename T>
  const T& get(const std::string& key) const;

 private:
  std::map<std::string, ResultValue> values_;
};

[[noreturn]] void throw_missing_key(const std::string& key, const char* expected);

template <typename T>
const T& WorkflowResult::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw_missing_key(key, nullptr);
  const T* v = std::get_if<T>(&it->second);
  if (!v) throw_missing_key(key, "of the requested type");
  return *v;
}

}  // namespace quasimo
