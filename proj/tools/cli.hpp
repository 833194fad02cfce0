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

#include <iosfwd>
#include <string>
#include <vector>

#include "quasimo/model.hpp"
#include "quasimo/workflow.hpp"

namespace quasimo::cli {

/// Exit codes of the command-line runner.
enum ExitCode : int { kOk = 0, kRejected = 1, kConfigError = 2, kRuntimeError = 3 };

/// Entry point shared by the executable and the tests. `args[0]` is the
/// program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Known model types, sorted.
std::vector<std::string> list_models();

/// Formats with 17 significant digits, appending ".0" to integral output.
std::string format_double(double v);

}  // namespace quasimo::cli
