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


#include "quasimo/workflow.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "quasimo/ansatz.hpp"
#include "quasimo/error.hpp"
#include "quasimo/simulator.hpp"

namespace quasimo {

namespace {

struct Registry {
  Registry();
  std::mutex mutex;
  std::map<std::string, WorkflowFactory> factories;
};

template <typename T>
WorkflowFactory factory_for() {
  return [](const WorkflowConfig& cfg) -> std::unique_ptr<QuantumSimulationWorkflow> {
    return std::make_unique<T>(cfg);
  };
}

Registry::Registry() {
  factories["time-dependent"] = factory_for<TimeDependentWorkflow>();
  factories["vqe"] = factory_for<VqeWorkflow>();
  factories["qaoa"] = factory_for<QaoaWorkflow>();
  factories["qite"] = factory_for<QiteWorkflow>();
}

Registry& registry() {
  static Registry r;
  return r;
}

std::uint64_t seed_of(const WorkflowConfig& cfg) {
  return static_cast<std::uint64_t>(cfg.get_int("seed", 0));
}

std::size_t positive_count(const WorkflowConfig& cfg, const std::string& key,
                           std::int64_t fallback, std::int64_t minimum) {
  const auto v = cfg.get_int(key, fallback);
  if (v < minimum) {
    throw Error(ErrorCode::BadConfig,
                "option '" + key + "' must be >= " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(v);
}

void require_key(const WorkflowConfig& cfg, const std::string& key, const std::string& wf) {
  if (!cfg.has(key)) {
    throw Error(ErrorCode::BadConfig, "workflow '" + wf + "' requires option '" + key + "'");
  }
}

std::shared_ptr<const Optimizer> optimizer_from_config(const WorkflowConfig& cfg) {
  if (!cfg.has("optimizer")) return nullptr;
  Options opts;
  for (const char* key : {"budget", "algorithm", "tolerance", "c", "A", "step"}) {
    if (cfg.has(key)) opts.set(key, cfg.values().at(key));
  }
  return create_optimizer(cfg.get_string("optimizer", ""), opts);
}

const std::set<std::string> kEvaluatorKeys = {"shots", "seed"};
const std::set<std::string> kOptimizerKeys = {"optimizer", "budget", "algorithm", "tolerance",
                                              "c", "A", "step"};

std::set<std::string> keys(std::initializer_list<const std::set<std::string>*> groups,
                           std::initializer_list<std::string> extra) {
  std::set<std::string> out(extra);
  for (const auto* g : groups) out.insert(g->begin(), g->end());
  return out;
}

void add_counts(GateStats& into, const GateStats& from, std::size_t times) {
  for (const auto& [k, v] : from) into[k] += v * times;
}

Circuit prep_or_empty(const QuantumSimulationModel& m) {
  return m.state_prep ? *m.state_prep : Circuit(m.num_qubits());
}

}  // namespace

void register_workflow(const std::string& name, WorkflowFactory factory) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.factories[name] = std::move(factory);
}

std::unique_ptr<QuantumSimulationWorkflow> get_workflow(const std::string& name,
                                                        const WorkflowConfig& cfg) {
  WorkflowFactory f;
  {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.factories.find(name);
    if (it == r.factories.end()) {
      throw Error(ErrorCode::UnknownWorkflow, "no workflow named '" + name + "'");
    }
    f = it->second;
  }
  return f(cfg);
}

std::vector<std::string> list_workflows() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> out;
  for (const auto& [k, v] : r.factories) out.push_back(k);
  return out;
}

std::shared_ptr<const CostFunctionEvaluator> evaluator_from_config(const WorkflowConfig& cfg) {
  const auto shots = cfg.get_int("shots", 0);
  if (shots < 0) throw Error(ErrorCode::BadConfig, "option 'shots' must be >= 0");
  if (shots == 0) return std::make_shared<ExactEvaluator>();
  return std::make_shared<TomographyEvaluator>(static_cast<std::size_t>(shots), seed_of(cfg));
}

// ------------------------------------------------------------ time-dependent

TimeDependentWorkflow::TimeDependentWorkflow(const WorkflowConfig& cfg) {
  cfg.require_known(keys({&kEvaluatorKeys}, {"dt", "steps", "trotter-order"}),
                    "workflow 'time-dependent'");
  require_key(cfg, "dt", name());
  require_key(cfg, "steps", name());
  dt_ = cfg.get_double("dt", 0.0);
  if (!(dt_ > 0.0)) throw Error(ErrorCode::BadConfig, "option 'dt' must be > 0");
  steps_ = positive_count(cfg, "steps", 0, 0);
  order_ = static_cast<int>(cfg.get_int("trotter-order", 2));
  if (order_ != 1 && order_ != 2) {
    throw Error(ErrorCode::BadConfig, "option 'trotter-order' must be 1 or 2");
  }
  evaluator_ = evaluator_from_config(cfg);
}

WorkflowResult TimeDependentWorkflow::execute(const QuantumSimulationModel& m) const {
  m.validate();
  const std::size_t n = m.num_qubits();
  const Circuit prep = prep_or_empty(m);
  const Circuit step = order_ == 1 ? trotter_step(m.hamiltonian, dt_, n)
                                   : symmetric_trotter_step(m.hamiltonian, dt_, n);
  StateVector state = run(prep);
  std::vector<double> values;
  values.reserve(steps_ + 1);
  for (std::size_t k = 0; k <= steps_; ++k) {
    if (k > 0) state = run(step, std::move(state));
    values.push_back(evaluator_->evaluate(state, m.observable, k));
  }
  GateStats stats = gate_counts(prep);
  add_counts(stats, gate_counts(step), steps_);
  WorkflowResult r;
  r.set("exp-vals", values);
  r.set("final-circuit-stats", stats);
  return r;
}

// ----------------------------------------------------------------------- VQE

VqeWorkflow::VqeWorkflow(const WorkflowConfig& cfg) {
  cfg.require_known(keys({&kEvaluatorKeys, &kOptimizerKeys}, {}), "workflow 'vqe'");
  optimizer_ = optimizer_from_config(cfg);
  evaluator_ = evaluator_from_config(cfg);
  seed_ = seed_of(cfg);
}

VqeWorkflow::VqeWorkflow(std::shared_ptr<const Optimizer> optimizer,
                         std::shared_ptr<const CostFunctionEvaluator> evaluator, std::uint64_t seed)
    : optimizer_(std::move(optimizer)),
      evaluator_(evaluator ? std::move(evaluator) : std::make_shared<ExactEvaluator>()),
      seed_(seed) {}

namespace {

struct VariationalRun {
  OptResult opt;
  Circuit best_circuit;
};

VariationalRun minimize_energy(const Circuit& ansatz, const PauliOperator& obs,
                               const Optimizer& optimizer, const CostFunctionEvaluator& evaluator,
                               std::vector<double> x0, std::uint64_t seed,
                               std::uint64_t stream_base) {
  std::uint64_t calls = 0;
  Objective f = [&](std::span<const double> theta) {
    return evaluator.evaluate(bind_parameters(ansatz, theta), obs, stream_base + calls++);
  };
  VariationalRun out{optimizer.minimize(f, std::move(x0), seed), Circuit()};
  out.best_circuit = bind_parameters(ansatz, out.opt.best_params);
  return out;
}

}  // namespace

WorkflowResult VqeWorkflow::execute(const QuantumSimulationModel& m) const {
  if (!optimizer_) throw Error(ErrorCode::NoOptimizer, "workflow 'vqe' needs an optimizer");
  m.validate();
  if (!m.state_prep || m.num_params == 0) {
    throw Error(ErrorCode::InvalidArgument, "VQE needs an ansatz with at least one parameter");
  }
  auto run_result = minimize_energy(*m.state_prep, m.observable, *optimizer_, *evaluator_,
                                    std::vector<double>(m.num_params, 0.0), seed_, 0);
  WorkflowResult r;
  r.set("energy", run_result.opt.best_value);
  r.set("opt-params", run_result.opt.best_params);
  r.set("trace", run_result.opt.trace);
  r.set("final-circuit-stats", gate_counts(run_result.best_circuit));
  return r;
}

// ---------------------------------------------------------------------- QAOA

QaoaWorkflow::QaoaWorkflow(const WorkflowConfig& cfg) {
  cfg.require_known(keys({&kEvaluatorKeys, &kOptimizerKeys}, {"steps", "starts"}),
                    "workflow 'qaoa'");
  require_key(cfg, "steps", name());
  p_ = positive_count(cfg, "steps", 1, 1);
  starts_ = positive_count(cfg, "starts", 10, 1);
  optimizer_ = optimizer_from_config(cfg);
  evaluator_ = evaluator_from_config(cfg);
  seed_ = seed_of(cfg);
}

WorkflowResult QaoaWorkflow::execute(const QuantumSimulationModel& m) const {
  if (!optimizer_) throw Error(ErrorCode::NoOptimizer, "workflow 'qaoa' needs an optimizer");
  m.validate();
  const std::size_t n = m.num_qubits();
  Circuit ansatz = prep_or_empty(m);
  ansatz.append(qaoa_ansatz(m.hamiltonian, p_, n));

  Rng angles(seed_, 0x51A);
  std::optional<VariationalRun> best;
  Trace trace;
  std::size_t offset = 0;
  for (std::size_t s = 0; s < starts_; ++s) {
    std::vector<double> x0(2 * p_);
    for (auto& x : x0) x = 2.0 * std::numbers::pi * angles.uniform();
    auto run_result = minimize_energy(ansatz, m.observable, *optimizer_, *evaluator_,
                                      std::move(x0), splitmix64(seed_ + s), offset);
    for (const auto& [i, v] : run_result.opt.trace) trace.emplace_back(offset + i, v);
    offset += run_result.opt.evaluations_used;
    if (!best || run_result.opt.best_value < best->opt.best_value) best = std::move(run_result);
  }
  WorkflowResult r;
  r.set("energy", best->opt.best_value);
  r.set("opt-params", best->opt.best_params);
  r.set("trace", trace);
  r.set("final-circuit-stats", gate_counts(best->best_circuit));
  return r;
}

// ---------------------------------------------------------------------- QITE

std::vector<PauliString> pauli_basis(std::size_t n) {
  if (n > 16) throw Error(ErrorCode::TooManyQubits, "Pauli basis limited to 16 qubits");
  std::vector<PauliString> out;
  const std::uint64_t dim = std::uint64_t{1} << n;
  out.reserve(dim * dim - 1);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      if (x == 0 && z == 0) continue;
      out.push_back(PauliString::from_masks(x, z));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QiteWorkflow::QiteWorkflow(const WorkflowConfig& cfg) {
  cfg.require_known(keys({&kEvaluatorKeys}, {"steps", "step-size", "circuit-optimizer"}),
                    "workflow 'qite'");
  require_key(cfg, "steps", name());
  require_key(cfg, "step-size", name());
  steps_ = positive_count(cfg, "steps", 0, 0);
  step_size_ = cfg.get_double("step-size", 0.0);
  if (!(step_size_ > 0.0)) throw Error(ErrorCode::BadConfig, "option 'step-size' must be > 0");
  if (cfg.has("circuit-optimizer")) {
    circuit_optimizer_ = create_circuit_optimizer(cfg.get_string("circuit-optimizer", ""));
  }
  evaluator_ = evaluator_from_config(cfg);
}

WorkflowResult QiteWorkflow::execute(const QuantumSimulationModel& m) const {
  m.validate();
  const std::size_t n = m.num_qubits();
  if (n > kMaxQubits) {
    throw Error(ErrorCode::TooManyQubitsForQite,
                "QITE supports at most " + std::to_string(kMaxQubits) + " qubits, got " +
                    std::to_string(n));
  }
  const PauliOperator& h = m.hamiltonian;
  const auto basis = pauli_basis(n);
  const auto nb = static_cast<Eigen::Index>(basis.size());
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);

  Circuit circuit = prep_or_empty(m);
  StateVector state = run(circuit);
  std::vector<double> energies;
  energies.push_back(evaluator_->evaluate(state, m.observable, 0));

  Eigen::MatrixXcd phi(dim, nb);
  for (std::size_t k = 1; k <= steps_; ++k) {
    for (Eigen::Index i = 0; i < nb; ++i) {
      StateVector p = state;
      p.apply(basis[static_cast<std::size_t>(i)]);
      const auto a = p.amplitudes();
      for (Eigen::Index r = 0; r < dim; ++r) phi(r, i) = a[static_cast<std::size_t>(r)];
    }
    Eigen::VectorXcd h_psi = Eigen::VectorXcd::Zero(dim);
    for (const auto& [s, c] : h.terms()) {
      StateVector p = state;
      if (!s.is_identity()) p.apply(s);
      const auto a = p.amplitudes();
      for (Eigen::Index r = 0; r < dim; ++r) h_psi[r] += c.real() * a[static_cast<std::size_t>(r)];
    }
    const double energy = expectation(state, h);
    double norm = 1.0 - 2.0 * step_size_ * energy;
    if (norm <= 0.0) norm = std::exp(-2.0 * step_size_ * energy);

    Eigen::MatrixXd system = 2.0 * (phi.adjoint() * phi).real();
    system.diagonal().array() += kRegularization;
    const Eigen::VectorXd rhs = 2.0 * (phi.adjoint() * h_psi).imag() / std::sqrt(norm);

    Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
    Eigen::VectorXd a = ldlt.solve(rhs);
    if (ldlt.info() != Eigen::Success || !a.allFinite()) {
      a = system.completeOrthogonalDecomposition().solve(rhs);
      if (!a.allFinite()) {
        throw Error(ErrorCode::SingularSystem,
                    "QITE linear system unsolvable at step " + std::to_string(k));
      }
    }

    Circuit update(n);
    for (Eigen::Index i = 0; i < nb; ++i) {
      const double theta = a[i] * step_size_;
      if (std::abs(theta) < 1e-12) continue;
      update.append(exp_pauli(Angle(theta), basis[static_cast<std::size_t>(i)], n));
    }
    circuit.append(update);
    if (circuit_optimizer_) {
      circuit = circuit_optimizer_->optimize(circuit);
      state = run(circuit);
    } else {
      state = run(update, std::move(state));
    }
    energies.push_back(evaluator_->evaluate(state, m.observable, k));
  }

  WorkflowResult r;
  r.set("energy", energies.back());
  r.set("exp-vals", energies);
  r.set("final-circuit-stats", gate_counts(circuit));
  return r;
}

}  // namespace quasimo
