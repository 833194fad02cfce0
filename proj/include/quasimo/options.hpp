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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace quasimo {

using OptionValue = std::variant<bool, std::int64_t, double, std::string>;

/// String-keyed scalar option map, mirroring the `{{"dt", 0.05}, {"steps", 100}}`
/// configuration style of workflows and optimizers.
class Options {
 public:
  Options() = default;
  Options(std::initializer_list<std::pair<const std::string, OptionValue>> init)
      : values_(init) {}

  void set(const std::string& key, OptionValue value) {
    values_[key] = std::move(value);
  }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  bool empty() const { return values_.empty(); }
  const std::map<std::string, OptionValue>& values() const { return values_; }

  /// Numeric lookup; integers and booleans convert. Throws BadConfig when the
  /// stored value is a string.
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;

  /// Throws BadConfig naming the first key not in `allowed`.
  void require_known(const std::set<std::string>& allowed,
                     const std::string& context) const;

 private:
  std::map<std::string, OptionValue> values_;
};

}  // namespace quasimo
