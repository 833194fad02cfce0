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
#include <random>

#include "quasimo/costfn.hpp"
#include "quasimo/error.hpp"
#include "quasimo/model.hpp"

using namespace quasimo;

TEST(Exact, FlippedQubit) {
  Circuit c(1);
  c.x(0);
  EXPECT_DOUBLE_EQ(evaluate(c, PauliOperator::Z(0), EvaluatorConfig::exact()), -1.0);
}

TEST(Tomography, ConstantIsAnalytic) {
  EXPECT_DOUBLE_EQ(evaluate(Circuit(1), PauliOperator(2.5), EvaluatorConfig::tomography(1, 3)), 2.5);
}

TEST(Tomography, BasisStateIsNoiseless) {
  Circuit c(9);
  for (std::size_t i = 1; i < 9; i += 2) c.x(i);
  EXPECT_NEAR(evaluate(c, staggered_magnetization(9), EvaluatorConfig::tomography(8192, 1)), 1.0,
              1e-12);
}

TEST(Tomography, MeasuresXAndYBases) {
  Circuit plus(1);
  plus.h(0);
  EXPECT_DOUBLE_EQ(evaluate(plus, PauliOperator::X(0), EvaluatorConfig::tomography(100, 1)), 1.0);
  Circuit plus_i(1);
  plus_i.h(0).s(0);
  EXPECT_DOUBLE_EQ(evaluate(plus_i, PauliOperator::Y(0), EvaluatorConfig::tomography(100, 1)), 1.0);
  Circuit bell(2);
  bell.h(0).cnot(0, 1);
  const auto yy = PauliOperator::Y(0) * PauliOperator::Y(1);
  EXPECT_DOUBLE_EQ(evaluate(bell, yy, EvaluatorConfig::tomography(100, 1)), -1.0);
}

TEST(Tomography, UnbiasedAcrossSeeds) {
  Circuit c(2);
  c.ry(0, 0.9).cnot(0, 1).rx(1, 0.4);
  const auto obs = PauliOperator::parse("0.8*Z(0)*Z(1) - 0.5*X(1) + 0.3*Y(0)");
  const double exact = evaluate(c, obs, EvaluatorConfig::exact());
  const std::size_t shots = 1000;
  double sum = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) sum += evaluate(c, obs, EvaluatorConfig::tomography(shots, s));
  const double mean = sum / seeds;
  // sigma of the mean is at most sum|c_k| / sqrt(shots * seeds).
  const double sigma = obs.l1_norm_without_constant() / std::sqrt(shots * seeds);
  EXPECT_LT(std::abs(mean - exact), 3 * sigma);
}

TEST(Tomography, ReproducibleAndStreamSensitive) {
  Circuit c(2);
  c.h(0).ry(1, 0.3);
  const auto obs = PauliOperator::parse("X(0) + Z(1)");
  const TomographyEvaluator ev(500, 9);
  EXPECT_EQ(ev.evaluate(c, obs, 4), ev.evaluate(c, obs, 4));
  EXPECT_NE(ev.evaluate(c, obs, 4), ev.evaluate(c, obs, 5));
}

TEST(Evaluator, Errors) {
  Circuit c(1, 1);
  c.rx(0, Angle::param(0));
  try {
    evaluate(c, PauliOperator::Z(0), EvaluatorConfig::exact());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundParameters);
  }
  try {
    evaluate(Circuit(1), PauliOperator(PauliString::single(0, Axis::Z), Complex(0, 1)),
             EvaluatorConfig::tomography(10, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHermitian);
  }
  EXPECT_THROW(create_evaluator(EvaluatorConfig::tomography(0, 0)), Error);
}
