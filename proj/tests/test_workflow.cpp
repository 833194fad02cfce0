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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "quasimo/ansatz.hpp"
#include "quasimo/error.hpp"
#include "quasimo/model.hpp"
#include "quasimo/tapering.hpp"
#include "quasimo/validation.hpp"
#include "quasimo/workflow.hpp"
#include "support/data.hpp"
#include "support/oracle.hpp"

using namespace quasimo;

namespace {

HeisenbergParams neel(std::size_t n, double jz) {
  HeisenbergParams p;
  p.num_spins = n;
  p.Jz = jz;
  for (std::size_t i = 0; i < n; ++i) p.initial_spins.push_back(static_cast<int>(i % 2));
  return p;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Registry, Builtins) {
  const auto names = list_workflows();
  for (const char* n : {"qaoa", "qite", "time-dependent", "vqe"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(code_of([] { get_workflow("adiabatic"); }), ErrorCode::UnknownWorkflow);
}

TEST(Registry, CustomWorkflow) {
  struct Constant final : QuantumSimulationWorkflow {
    std::string name() const override { return "constant"; }
    WorkflowResult execute(const QuantumSimulationModel&) const override {
      WorkflowResult r;
      r.set("energy", 42.0);
      return r;
    }
  };
  register_workflow("constant", [](const WorkflowConfig&) { return std::make_unique<Constant>(); });
  const auto wf = get_workflow("constant");
  EXPECT_DOUBLE_EQ(wf->execute(create_tfim(1, 1, 2)).get<double>("energy"), 42.0);
}

TEST(Config, Errors) {
  EXPECT_EQ(code_of([] { get_workflow("time-dependent", {{"steps", 3}}); }), ErrorCode::BadConfig);
  EXPECT_EQ(code_of([] { get_workflow("time-dependent", {{"dt", -0.1}, {"steps", 3}}); }),
            ErrorCode::BadConfig);
  EXPECT_EQ(code_of([] {
              get_workflow("time-dependent", {{"dt", 0.1}, {"steps", 3}, {"trotter-order", 3}});
            }),
            ErrorCode::BadConfig);
  EXPECT_EQ(code_of([] { get_workflow("vqe", {{"optimiser", std::string("spsa")}}); }),
            ErrorCode::BadConfig);
  EXPECT_EQ(code_of([] { get_workflow("vqe", {{"optimizer", std::string("bfgs")}}); }),
            ErrorCode::UnknownOptimizer);
  EXPECT_EQ(code_of([] { get_workflow("qite", {{"steps", 3}}); }), ErrorCode::BadConfig);
  EXPECT_EQ(code_of([] { get_workflow("qaoa", {{"optimizer", std::string("spsa")}}); }),
            ErrorCode::BadConfig);
}

TEST(Vqe, NoOptimizer) {
  const auto wf = get_workflow("vqe");
  const auto m = create_from_parts(rx_ry_ansatz(), PauliOperator::Z(0), 2);
  EXPECT_EQ(code_of([&] { wf->execute(m); }), ErrorCode::NoOptimizer);
}

TEST(TimeDependent, StepZeroIsInitialObservable) {
  const auto wf = get_workflow("time-dependent", {{"dt", 0.05}, {"steps", 0}});
  const auto r = wf->execute(create_heisenberg(neel(9, 0.0)));
  const auto& v = r.get<std::vector<double>>("exp-vals");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], 1.0);
}

TEST(TimeDependent, TracksExactEvolution) {
  const auto m = create_heisenberg(neel(5, 0.5));
  const auto wf = get_workflow("time-dependent", {{"dt", 0.02}, {"steps", 25}});
  const auto v = wf->execute(m).get<std::vector<double>>("exp-vals");
  ASSERT_EQ(v.size(), 26u);
  const auto psi0 = run(*m.state_prep);
  for (std::size_t k = 0; k <= 25; k += 5) {
    const auto exact = exact_evolution(m.hamiltonian, psi0, 0.02 * static_cast<double>(k));
    EXPECT_NEAR(v[k], expectation(exact, m.observable), 1e-3) << k;
  }
}

TEST(TimeDependent, HeisenbergReferenceSeries) {
  for (const auto& [g, file] : {std::pair{0.0, "heisenberg_n9_g0.csv"},
                                std::pair{0.25, "heisenberg_n9_g0.25.csv"},
                                std::pair{4.0, "heisenberg_n9_g4.csv"}}) {
    const auto ref = testdata::series(testdata::path(file));
    const auto wf = get_workflow("time-dependent", {{"dt", 0.05}, {"steps", 100}});
    const auto v = wf->execute(create_heisenberg(neel(9, g))).get<std::vector<double>>("exp-vals");
    ASSERT_EQ(v.size(), ref.size());
    for (std::size_t k = 0; k <= 5; ++k) EXPECT_NEAR(v[k], ref[k], 5e-3) << g << " step " << k;
    EXPECT_LT(rmse(v, ref), 0.05) << g;
  }
}

TEST(TimeDependent, GateStatsCountSteps) {
  const auto m = create_heisenberg(neel(3, 0.0));
  const auto r1 = get_workflow("time-dependent", {{"dt", 0.1}, {"steps", 1}})->execute(m);
  const auto r4 = get_workflow("time-dependent", {{"dt", 0.1}, {"steps", 4}})->execute(m);
  const auto& s1 = r1.get<GateStats>("final-circuit-stats");
  const auto& s4 = r4.get<GateStats>("final-circuit-stats");
  EXPECT_EQ(s4.at("CNOT"), 4 * s1.at("CNOT"));
}

TEST(Vqe, TaperedHydrogen) {
  const auto h = PauliOperator::parse("-0.328717 + 0.181289*X(0) - 0.787967*Z(0)");
  const auto m = create_from_parts(rx_ry_ansatz(), h, 2);
  const auto wf = get_workflow("vqe", {{"optimizer", std::string("nelder-mead")}, {"budget", 200}});
  const auto r = wf->execute(m);
  EXPECT_NEAR(r.get<double>("energy"), -1.13727017466, 1e-4);
  EXPECT_LE(r.get<Trace>("trace").back().first, 200u);
  EXPECT_EQ(r.get<std::vector<double>>("opt-params").size(), 2u);
}

TEST(Vqe, BestIsTraceMinimum) {
  const auto h = PauliOperator::parse("0.4*X(0) - 0.9*Z(0)");
  const auto m = create_from_parts(rx_ry_ansatz(), h, 2);
  const auto r = get_workflow("vqe", {{"optimizer", std::string("spsa")}, {"budget", 120}})->execute(m);
  const auto& t = r.get<Trace>("trace");
  ASSERT_FALSE(t.empty());
  double lowest = t.front().second;
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_LT(t[i - 1].first, t[i].first);
    lowest = std::min(lowest, t[i].second);
  }
  EXPECT_LE(t.back().first, 120u);
  EXPECT_DOUBLE_EQ(lowest, r.get<double>("energy"));
}

TEST(Vqe, TomographyIsSeedDeterministic) {
  const auto h = PauliOperator::parse("0.4*X(0) - 0.9*Z(0)");
  const auto m = create_from_parts(rx_ry_ansatz(), h, 2);
  const WorkflowConfig cfg{{"optimizer", std::string("spsa")}, {"budget", 80}, {"shots", 500},
                           {"seed", 3}};
  const auto a = get_workflow("vqe", cfg)->execute(m);
  const auto b = get_workflow("vqe", cfg)->execute(m);
  EXPECT_EQ(a.get<double>("energy"), b.get<double>("energy"));
  EXPECT_EQ(a.get<std::vector<double>>("opt-params"), b.get<std::vector<double>>("opt-params"));
}

TEST(Qaoa, SmallStar) {
  const auto m = create_star_maxcut(3);
  const auto wf = get_workflow("qaoa", {{"steps", 2}, {"starts", 4}, {"optimizer", std::string("nelder-mead")},
                                        {"budget", 300}});
  EXPECT_NEAR(wf->execute(m).get<double>("energy"), -2.0, 1e-2);
}

TEST(Qite, TfimReferenceSeries) {
  for (const auto& [init, file] : {std::pair{"000", "qite_tfim3_000.csv"},
                                   std::pair{"100", "qite_tfim3_100.csv"},
                                   std::pair{"110", "qite_tfim3_110.csv"}}) {
    auto m = create_tfim(-1, -1, 3);
    Circuit prep(3);
    for (std::size_t q = 0; q < 3; ++q) {
      if (init[q] == '1') prep.x(q);
    }
    m.state_prep = prep;
    const auto wf = get_workflow("qite", {{"steps", 20}, {"step-size", 0.45}});
    const auto e = wf->execute(m).get<std::vector<double>>("exp-vals");
    const auto ref = testdata::series(testdata::path(file));
    ASSERT_EQ(e.size(), 21u);
    EXPECT_NEAR(e[0], ref[0], 1e-12) << init;
    EXPECT_NEAR(e.back(), -3.49396, 1e-2) << init;
    for (std::size_t k = 1; k < e.size(); ++k) EXPECT_LE(e[k], e[k - 1] + 1e-3) << init << " " << k;
  }
}

TEST(Qite, GroundStateIsStationary) {
  const auto h = PauliOperator::parse("-1*Z(0)");
  const auto m = ModelBuilder().set_observable(h).set_state_prep(Circuit(1)).build();
  const auto e = get_workflow("qite", {{"steps", 5}, {"step-size", 0.3}})
                      ->execute(m)
                      .get<std::vector<double>>("exp-vals");
  for (double v : e) EXPECT_NEAR(v, -1.0, 1e-10);
}

TEST(Qite, CircuitOptimizerGivesSameEnergies) {
  const auto m = create_tfim(-1, -1, 2);
  const auto plain = get_workflow("qite", {{"steps", 4}, {"step-size", 0.3}})->execute(m);
  const auto opt = get_workflow("qite", {{"steps", 4},
                                         {"step-size", 0.3},
                                         {"circuit-optimizer", std::string("cancel-adjacent-inverses")}})
                       ->execute(m);
  const auto& a = plain.get<std::vector<double>>("exp-vals");
  const auto& b = opt.get<std::vector<double>>("exp-vals");
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  EXPECT_LE(opt.get<GateStats>("final-circuit-stats").at("total"),
            plain.get<GateStats>("final-circuit-stats").at("total"));
}

TEST(Qite, TooManyQubits) {
  const auto wf = get_workflow("qite", {{"steps", 1}, {"step-size", 0.1}});
  EXPECT_EQ(code_of([&] { wf->execute(create_tfim(-1, -1, 6)); }), ErrorCode::TooManyQubitsForQite);
}

TEST(PauliBasis, Size) {
  EXPECT_EQ(pauli_basis(1).size(), 3u);
  EXPECT_EQ(pauli_basis(3).size(), 63u);
  const auto b = pauli_basis(2);
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
}
