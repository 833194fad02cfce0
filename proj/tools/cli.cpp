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


#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "quasimo/ansatz.hpp"
#include "quasimo/error.hpp"
#include "quasimo/tapering.hpp"
#include "quasimo/validation.hpp"

namespace quasimo::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool is_config_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadConfig:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownWorkflow:
    case ErrorCode::UnknownOptimizer:
    case ErrorCode::UnknownObservable:
    case ErrorCode::MissingObservable:
    case ErrorCode::NoOptimizer:
      return true;
    default:
      return false;
  }
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadConfig, msg); }

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& section) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      bad("unknown key '" + key + "' in section '" + section + "'");
    }
  }
}

template <typename T>
T value_or(const json& obj, const char* key, T fallback, const std::string& section) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    bad("key '" + std::string(key) + "' in section '" + section + "' has the wrong type");
  }
}

template <typename T>
T required(const json& obj, const char* key, const std::string& section) {
  if (!obj.contains(key)) bad("section '" + section + "' is missing key '" + key + "'");
  return value_or<T>(obj, key, T{}, section);
}

OptionValue to_option(const std::string& key, const json& v) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return v.get<std::string>();
  bad("workflow key '" + key + "' must be a scalar");
}

std::uint64_t bits_from_string(const std::string& bits, std::size_t n, const std::string& key) {
  if (bits.size() != n) {
    bad("key '" + key + "' needs " + std::to_string(n) + " characters, got '" + bits + "'");
  }
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (bits[q] == '1') {
      out |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      bad("key '" + key + "' must contain only 0 and 1");
    }
  }
  return out;
}

// "ghz" or a bitstring whose character q is qubit q.
Circuit initial_state(const json& model, std::size_t n) {
  Circuit c(n);
  if (!model.contains("initial_state")) return c;
  const auto text = value_or<std::string>(model, "initial_state", "", "model");
  if (text == "ghz") {
    c.h(0);
    for (std::size_t q = 0; q + 1 < n; ++q) c.cnot(q, q + 1);
    return c;
  }
  const auto bits = bits_from_string(text, n, "initial_state");
  for (std::size_t q = 0; q < n; ++q) {
    if ((bits >> q) & 1U) c.x(q);
  }
  return c;
}

fs::path resolve_data(const std::string& file, const fs::path& config_dir) {
  const fs::path p(file);
  if (p.is_absolute()) return p;
  for (const fs::path& base : {config_dir, fs::path(QUASIMO_DATA_DIR), fs::current_path()}) {
    if (fs::exists(base / p)) return base / p;
  }
  return config_dir / p;
}

Circuit build_ansatz(const json& node, std::size_t n) {
  if (!node.is_object()) bad("key 'ansatz' must be an object");
  const auto type = required<std::string>(node, "type", "model.ansatz");
  if (type == "hardware-efficient") {
    require_keys(node, {"type", "layers"}, "model.ansatz");
    const auto layers = value_or<std::int64_t>(node, "layers", 1, "model.ansatz");
    if (layers < 1) bad("key 'layers' in section 'model.ansatz' must be >= 1");
    return hardware_efficient(n, static_cast<std::size_t>(layers));
  }
  if (type == "rx-ry") {
    require_keys(node, {"type"}, "model.ansatz");
    if (n != 1) bad("ansatz 'rx-ry' needs a 1-qubit operator, got " + std::to_string(n));
    return rx_ry_ansatz();
  }
  if (type == "pauli-rotations") {
    require_keys(node, {"type", "reference", "generators"}, "model.ansatz");
    const auto ref = value_or<std::string>(node, "reference", std::string(n, '0'), "model.ansatz");
    const auto gens = required<std::vector<std::string>>(node, "generators", "model.ansatz");
    std::vector<PauliString> strings;
    for (const auto& g : gens) {
      const auto op = PauliOperator::parse(g);
      if (op.size() != 1 || op.terms().begin()->second != Complex(1.0)) {
        bad("generator '" + g + "' must be a single Pauli string");
      }
      strings.push_back(op.terms().begin()->first);
    }
    return pauli_rotations(bits_from_string(ref, n, "reference"), strings, n);
  }
  bad("unknown ansatz type '" + type + "'");
}

QuantumSimulationModel build_model(const json& model, const fs::path& config_dir) {
  if (!model.is_object()) bad("missing section 'model'");
  const auto type = required<std::string>(model, "type", "model");
  if (type == "heisenberg") {
    require_keys(model, {"type", "num_spins", "Jx", "Jy", "Jz", "h_ext", "initial_spins", "observable"},
                 "model");
    HeisenbergParams p;
    p.num_spins = required<std::size_t>(model, "num_spins", "model");
    p.Jx = value_or(model, "Jx", 1.0, "model");
    p.Jy = value_or(model, "Jy", 1.0, "model");
    p.Jz = value_or(model, "Jz", 0.0, "model");
    p.h_ext = value_or(model, "h_ext", 0.0, "model");
    p.initial_spins =
        value_or(model, "initial_spins", std::vector<int>(p.num_spins, 0), "model");
    p.observable_name = value_or<std::string>(model, "observable", p.observable_name, "model");
    return create_heisenberg(p);
  }
  if (type == "tfim") {
    require_keys(model, {"type", "num_spins", "Jz", "hx", "initial_state"}, "model");
    const auto n = required<std::size_t>(model, "num_spins", "model");
    auto m = create_tfim(value_or(model, "Jz", -1.0, "model"), value_or(model, "hx", -1.0, "model"), n);
    m.state_prep = initial_state(model, n);
    return m;
  }
  if (type == "star_maxcut") {
    require_keys(model, {"type", "num_qubits"}, "model");
    return create_star_maxcut(required<std::size_t>(model, "num_qubits", "model"));
  }
  if (type == "operator") {
    require_keys(model, {"type", "file", "operator", "transform", "ansatz", "initial_state"}, "model");
    PauliOperator h;
    if (model.contains("file")) {
      h = load_operator_file(resolve_data(required<std::string>(model, "file", "model"), config_dir));
    } else if (model.contains("operator")) {
      h = PauliOperator::parse(required<std::string>(model, "operator", "model"));
    } else {
      bad("section 'model' of type 'operator' needs key 'file' or 'operator'");
    }
    if (model.contains("transform")) {
      h = operator_transform(required<std::string>(model, "transform", "model"), h);
    }
    const std::size_t n = std::max<std::size_t>(h.num_qubits(), 1);
    Circuit prep = initial_state(model, n);
    if (model.contains("ansatz")) prep.append(build_ansatz(model.at("ansatz"), n));
    return ModelBuilder().set_name("operator").set_observable(h).set_state_prep(prep).build();
  }
  bad("unknown model type '" + type + "'");
}

std::string csv_for(const std::string& workflow, const WorkflowConfig& cfg, const WorkflowResult& r) {
  std::ostringstream os;
  if (workflow == "time-dependent") {
    const double dt = cfg.get_double("dt", 0.0);
    os << "step,time,exp_val\n";
    const auto& v = r.get<std::vector<double>>("exp-vals");
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << k << ',' << format_double(static_cast<double>(k) * dt) << ',' << format_double(v[k]) << '\n';
    }
  } else if (workflow == "qite") {
    const double db = cfg.get_double("step-size", 0.0);
    os << "step,beta,energy\n";
    const auto& v = r.get<std::vector<double>>("exp-vals");
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << k << ',' << format_double(static_cast<double>(k) * db) << ',' << format_double(v[k]) << '\n';
    }
  } else if (r.has("trace")) {
    os << "eval,energy\n";
    for (const auto& [i, v] : r.get<Trace>("trace")) os << i << ',' << format_double(v) << '\n';
  } else if (r.has("exp-vals")) {
    os << "step,value\n";
    const auto& v = r.get<std::vector<double>>("exp-vals");
    for (std::size_t k = 0; k < v.size(); ++k) os << k << ',' << format_double(v[k]) << '\n';
  } else {
    os << "key,value\n";
    if (r.has("energy")) os << "energy," << format_double(r.get<double>("energy")) << '\n';
  }
  return os.str();
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> shots;
  std::string out;
  bool quiet = false;
};

int do_run(const RunArgs& a, std::ostream& out) {
  std::ifstream in(a.config);
  if (!in) bad("cannot open config '" + a.config + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) bad("config must be a JSON object");
  require_keys(cfg, {"model", "workflow", "evaluator", "output"}, "config");
  const fs::path config_dir = fs::absolute(a.config).parent_path();

  const json wf = cfg.value("workflow", json::object());
  if (!wf.is_object()) bad("section 'workflow' must be an object");
  const auto wf_name = required<std::string>(wf, "name", "workflow");
  WorkflowConfig wcfg;
  for (const auto& [key, value] : wf.items()) {
    if (key != "name") wcfg.set(key, to_option(key, value));
  }

  const json ev = cfg.value("evaluator", json::object());
  if (!ev.is_object()) bad("section 'evaluator' must be an object");
  require_keys(ev, {"mode", "shots", "seed"}, "evaluator");
  const auto mode = value_or<std::string>(ev, "mode", "exact", "evaluator");
  if (mode != "exact" && mode != "tomography") bad("key 'mode' in section 'evaluator' must be exact or tomography");
  std::int64_t shots = value_or<std::int64_t>(ev, "shots", 0, "evaluator");
  if (mode == "exact") shots = 0;
  if (mode == "tomography" && shots < 1) bad("key 'shots' in section 'evaluator' must be >= 1 for tomography");
  if (a.shots) shots = static_cast<std::int64_t>(*a.shots);
  std::uint64_t seed = value_or<std::uint64_t>(ev, "seed", 0, "evaluator");
  if (a.seed) {
    seed = *a.seed;
  } else if (const char* env = std::getenv("QUASIMO_SEED"); env && *env && !ev.contains("seed")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      bad("environment variable QUASIMO_SEED is not an unsigned integer");
    }
  }
  if (shots > 0) wcfg.set("shots", shots);
  wcfg.set("seed", static_cast<std::int64_t>(seed));

  const json output = cfg.value("output", json::object());
  if (!output.is_object()) bad("section 'output' must be an object");
  require_keys(output, {"dir", "file"}, "output");
  fs::path out_dir = a.out.empty() ? fs::path(value_or<std::string>(output, "dir", ".", "output"))
                                   : fs::path(a.out);
  const auto file = value_or<std::string>(output, "file", wf_name + ".csv", "output");

  const QuantumSimulationModel model = build_model(cfg.value("model", json()), config_dir);
  const auto workflow = get_workflow(wf_name, wcfg);
  const WorkflowResult result = workflow->execute(model);

  fs::create_directories(out_dir);
  const fs::path path = out_dir / file;
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  csv << csv_for(wf_name, wcfg, result);
  if (!a.quiet) {
    if (result.has("energy")) out << "energy " << format_double(result.get<double>("energy")) << '\n';
    if (result.has("exp-vals")) {
      out << "final exp-val " << format_double(result.get<std::vector<double>>("exp-vals").back()) << '\n';
    }
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingKey, "cannot open '" + path + "'");
  Table t;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty()) t.rows.push_back(split(line));
  }
  return t;
}

std::vector<double> column(const Table& t, const std::string& name, const std::string& path) {
  auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) {
    throw Error(ErrorCode::MissingKey, "'" + path + "' has no column '" + name + "'");
  }
  const auto idx = static_cast<std::size_t>(it - t.header.begin());
  std::vector<double> out;
  for (const auto& row : t.rows) {
    if (idx >= row.size()) throw Error(ErrorCode::MissingKey, "short row in '" + path + "'");
    out.push_back(std::stod(row[idx]));
  }
  return out;
}

struct ValidateArgs {
  std::string results;
  std::string reference;
  std::optional<double> value;
  std::string column = "energy";
  std::string measure = "abs-diff";
  std::string reduce = "last";
  double threshold = 1e-3;
};

int do_validate(const ValidateArgs& a, std::ostream& out) {
  const auto series = column(read_csv(a.results), a.column, a.results);
  ValidationCriteria c;
  c.threshold = a.threshold;
  c.key = a.column;
  WorkflowResult r;
  if (a.measure == "rmse") {
    if (a.reference.empty()) bad("rmse needs --reference");
    c.measure = Measure::Rmse;
    c.reference = column(read_csv(a.reference), a.column, a.reference);
    r.set(a.column, series);
  } else if (a.measure == "abs-diff") {
    if (series.empty()) throw Error(ErrorCode::MissingKey, "column '" + a.column + "' is empty");
    c.measure = Measure::AbsDiff;
    const double v = a.reduce == "min" ? *std::min_element(series.begin(), series.end()) : series.back();
    r.set(a.column, v);
    if (a.value) {
      c.reference = *a.value;
    } else if (!a.reference.empty()) {
      const auto ref = column(read_csv(a.reference), a.column, a.reference);
      if (ref.empty()) throw Error(ErrorCode::MissingKey, "reference column is empty");
      c.reference = a.reduce == "min" ? *std::min_element(ref.begin(), ref.end()) : ref.back();
    } else {
      bad("abs-diff needs --value or --reference");
    }
  } else {
    bad("unknown measure '" + a.measure + "'");
  }
  const auto outcome = accept_results(r, c);
  out << "distance " << format_double(outcome.distance) << '\n'
      << (outcome.accepted ? "ACCEPTED" : "REJECTED") << '\n';
  return outcome.accepted ? kOk : kRejected;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::vector<std::string> list_models() {
  return {"heisenberg", "operator", "star_maxcut", "tfim"};
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid quantum/classical simulation workflows"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Execute a workflow from a JSON config");
  run->add_option("--config", run_args.config, "Config file")->required();
  run->add_option("--seed", run_args.seed, "RNG seed (falls back to QUASIMO_SEED)");
  run->add_option("--shots", run_args.shots, "Shots per term; switches to tomography")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", run_args.out, "Output directory");
  run->add_flag("--quiet", run_args.quiet, "Suppress the summary");

  std::string filter;
  auto* lw = app.add_subcommand("list-workflows", "Registered workflow names");
  lw->add_option("filter", filter, "Substring filter");
  auto* lm = app.add_subcommand("list-models", "Model types accepted in configs");
  lm->add_option("filter", filter, "Substring filter");

  ValidateArgs va;
  auto* val = app.add_subcommand("validate", "Compare a results CSV against a reference");
  val->add_option("--results", va.results, "Results CSV")->required();
  val->add_option("--reference", va.reference, "Reference CSV");
  val->add_option("--value", va.value, "Scalar reference");
  val->add_option("--column", va.column, "Column to compare");
  val->add_option("--measure", va.measure, "abs-diff or rmse")
      ->check(CLI::IsMember({"abs-diff", "rmse"}));
  val->add_option("--reduce", va.reduce, "Scalar from a column: last or min")
      ->check(CLI::IsMember({"last", "min"}));
  val->add_option("--threshold", va.threshold, "Acceptance threshold (> 0)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*run) return do_run(run_args, out);
    if (*lw || *lm) {
      const auto names = *lw ? list_workflows() : list_models();
      for (const auto& n : names) {
        if (filter.empty() || n.find(filter) != std::string::npos) out << n << '\n';
      }
      return kOk;
    }
    if (*val) return do_validate(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (*val) return kConfigError;
    return is_config_error(e.code()) ? kConfigError : kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return *val ? kConfigError : kRuntimeError;
  }
  return kConfigError;
}

}  // namespace quasimo::cli
