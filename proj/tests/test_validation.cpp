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

#include <cmath>

#include "quasimo/error.hpp"
#include "quasimo/model.hpp"
#include "quasimo/validation.hpp"
#include "support/oracle.hpp"

using namespace quasimo;

TEST(GroundEnergy, MatchesDenseOracle) {
  const auto h = PauliOperator::parse("0.5*Z(0)*Z(1) - 0.3*X(0) + 0.2*Y(1)*X(2) + 1.5");
  EXPECT_NEAR(exact_ground_energy(h), oracle::ground(h, 3), 1e-12);
  EXPECT_NEAR(exact_ground_energy(PauliOperator::Z(0)), -1.0, 1e-14);
}

TEST(GroundEnergy, HydrogenAndTfim) {
  const auto h2 = load_operator_file(QUASIMO_TEST_DATA_DIR "/../../data/h2_4q.op");
  EXPECT_NEAR(exact_ground_energy(h2), -1.13727017466, 1e-8);
  EXPECT_NEAR(exact_ground_energy(create_tfim(-1, -1, 3).hamiltonian), -3.49396, 1e-5);
}

TEST(GroundEnergy, TooManyQubits) {
  try {
    exact_ground_energy(PauliOperator::Z(12));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyQubits);
  }
}

TEST(ExactEvolution, MatchesMatrixExponential) {
  const auto h = PauliOperator::parse("X(0)*X(1) + 0.4*Z(0) - 0.7*Y(1)*Z(2)");
  auto psi = StateVector::basis(3, 5);
  const auto out = exact_evolution(h, psi, 0.83);
  const Eigen::VectorXcd ref = oracle::expi(oracle::dense(h, 3), 0.83) * oracle::basis_state(3, 5);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(out.amplitude(i) - ref(i)), 0.0, 1e-12);
}

TEST(ExactEvolution, ZeroTimeIsIdentity) {
  const auto h = PauliOperator::parse("X(0) + Z(1)");
  const auto psi = StateVector::basis(2, 2);
  const auto out = exact_evolution(h, psi, 0.0);
  EXPECT_NEAR(std::abs(out.inner(psi) - Complex(1.0)), 0.0, 1e-13);
}

TEST(Rmse, Basics) {
  EXPECT_DOUBLE_EQ(rmse({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(rmse({0, 0}, {3, 4}), std::sqrt(12.5));
  EXPECT_THROW(rmse({1}, {1, 2}), Error);
}

TEST(AcceptResults, AbsDiff) {
  WorkflowResult r;
  r.set("energy", -1.1372);
  ValidationCriteria c;
  c.threshold = 1e-3;
  c.reference = -1.13727;
  auto o = accept_results(r, c);
  EXPECT_TRUE(o.accepted);
  EXPECT_NEAR(o.distance, 7e-5, 1e-12);
  c.threshold = 1e-5;
  EXPECT_FALSE(accept_results(r, c).accepted);
}

TEST(AcceptResults, RmseDefaultKey) {
  WorkflowResult r;
  r.set("exp-vals", std::vector<double>{1.0, 0.5, 0.0});
  ValidationCriteria c;
  c.measure = Measure::Rmse;
  c.threshold = 0.05;
  c.reference = std::vector<double>{1.0, 0.5, 0.1};
  const auto o = accept_results(r, c);
  EXPECT_NEAR(o.distance, 0.1 / std::sqrt(3.0), 1e-15);
  EXPECT_FALSE(o.accepted);
}

TEST(AcceptResults, Errors) {
  WorkflowResult r;
  r.set("energy", 0.0);
  ValidationCriteria c;
  c.threshold = 0.0;
  try {
    accept_results(r, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  c.threshold = 1.0;
  c.key = "missing";
  try {
    accept_results(r, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingKey);
  }
}

TEST(Validators, AcceptAllAndCriteria) {
  WorkflowResult r;
  r.set("energy", 2.0);
  AcceptAllValidator all;
  EXPECT_TRUE(all.validate(r).accepted);
  ValidationCriteria c;
  c.threshold = 0.5;
  c.reference = 1.0;
  CriteriaValidator v(c);
  EXPECT_FALSE(v.validate(r).accepted);
  EXPECT_DOUBLE_EQ(v.validate(r).distance, 1.0);
}

TEST(WorkflowResultAccess, TypedGet) {
  WorkflowResult r;
  r.set("energy", 1.5);
  EXPECT_TRUE(r.has("energy"));
  EXPECT_DOUBLE_EQ(r.get<double>("energy"), 1.5);
  EXPECT_THROW(r.get<std::vector<double>>("energy"), Error);
  EXPECT_THROW(r.get<double>("trace"), Error);
}
