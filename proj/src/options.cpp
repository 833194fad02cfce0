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


#include "quasimo/options.hpp"

#include <cmath>

#include "quasimo/error.hpp"

namespace quasimo {

double Options::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const auto& v = it->second;
  if (auto d = std::get_if<double>(&v)) return *d;
  if (auto i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  if (auto b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
  throw Error(ErrorCode::BadConfig, "option '" + key + "' must be numeric");
}

std::int64_t Options::get_int(const std::string& key,
                              std::int64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const auto& v = it->second;
  if (auto i = std::get_if<std::int64_t>(&v)) return *i;
  if (auto b = std::get_if<bool>(&v)) return *b ? 1 : 0;
  if (auto d = std::get_if<double>(&v)) {
    if (std::floor(*d) == *d) return static_cast<std::int64_t>(*d);
  }
  throw Error(ErrorCode::BadConfig, "option '" + key + "' must be an integer");
}

std::string Options::get_string(const std::string& key,
                                const std::string& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (auto s = std::get_if<std::string>(&it->second)) return *s;
  throw Error(ErrorCode::BadConfig, "option '" + key + "' must be a string");
}

void Options::require_known(const std::set<std::string>& allowed,
                            const std::string& context) const {
  for (const auto& [key, value] : values_) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::BadConfig,
                  "unknown option '" + key + "' for " + context);
    }
  }
}

}  // namespace quasimo
