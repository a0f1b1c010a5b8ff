// Copyright 2026 The wgent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "wgent/domain.hpp"

namespace wgent {
namespace {

TEST(EmitterParams, LossFollowsBeta) {
  const EmitterParams e(0.0, 1.0, 0.8);
  EXPECT_NEAR(e.loss(), 0.25, 1e-15);
  EXPECT_NEAR(e.total_width(), 1.25, 1e-15);
  EXPECT_NEAR(beta_from_gamma(e.coupling(), e.loss()), 0.8, 1e-15);
  EXPECT_FALSE(e.lossless());
  EXPECT_TRUE(EmitterParams(0.0, 2.0).lossless());
  EXPECT_EQ(EmitterParams(0.0, 2.0).loss(), 0.0);
}

TEST(EmitterParams, RejectsUnphysicalValues) {
  for (double beta : {0.0, -0.1, 1.01}) {
    try {
      EmitterParams(0.0, 1.0, beta);
      FAIL() << "beta " << beta << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parameter);
      EXPECT_EQ(e.module(), "domain");
    }
  }
  EXPECT_THROW(EmitterParams(0.0, 0.0), Error);
  EXPECT_THROW(EmitterParams(0.0, -1.0), Error);
  EXPECT_THROW(EmitterParams(std::nan(""), 1.0), Error);
}

TEST(EmitterParams, LifetimeConversion) {
  // hbar = 0.6582 ueV ns, so 1 ueV corresponds to 0.658 ns
  EXPECT_NEAR(lifetime_from_linewidth(1.0), kHbarMicroeVns, 1e-12);
  EXPECT_THROW(lifetime_from_linewidth(0.0), Error);
}

TEST(SystemParams, DetuningParametrisation) {
  const auto s = SystemParams::from_detuning(2.0, 1.0, 1.0, 0.5, 0.7, 0.9);
  EXPECT_DOUBLE_EQ(s.detuning(), 0.5);
  EXPECT_DOUBLE_EQ(s.second.energy(), 2.5);
  EXPECT_DOUBLE_EQ(s.second.coupling(), 0.7);
  EXPECT_FALSE(s.lossless());
  EXPECT_NEAR(s.max_total_width(), 1.0, 1e-15);
  const auto w = s.swapped();
  EXPECT_DOUBLE_EQ(w.first.energy(), 2.5);
  EXPECT_DOUBLE_EQ(s.shifted(-2.0).first.energy(), 0.0);
}

TEST(TwoQubitPure, NormalisationAndBellStates) {
  const TwoQubitPure v(1.0, 0.0, 0.0, 1.0);
  EXPECT_NEAR(v.normalized().norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(TwoQubitPure::phi_minus().norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(TwoQubitPure::psi_minus().norm_squared(), 1.0, 1e-15);
  EXPECT_THROW(TwoQubitPure().normalized(), Error);
}

TEST(TwoQubitDensity, ValidatesInput) {
  Matrix4c m = Matrix4c::Identity() * 0.25;
  EXPECT_NO_THROW(TwoQubitDensity{m});
  Matrix4c bad_trace = Matrix4c::Identity() * 0.3;
  EXPECT_THROW(TwoQubitDensity{bad_trace}, Error);
  Matrix4c non_herm = m;
  non_herm(0, 1) = 0.1;
  EXPECT_THROW(TwoQubitDensity{non_herm}, Error);
  Matrix4c negative = Matrix4c::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(TwoQubitDensity{negative}, Error);
  EXPECT_THROW(TwoQubitDensity::from_unnormalized(Matrix4c::Zero()), Error);
}

TEST(TwoQubitDensity, MixtureOfPureStates) {
  const auto rho = density_from_pure_mixture({{1.0, TwoQubitPure::up_up()}, {3.0, TwoQubitPure::down_down()}});
  EXPECT_NEAR(rho(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(rho(3, 3).real(), 0.75, 1e-15);
  EXPECT_NEAR(rho.purity(), 0.625, 1e-15);
  EXPECT_THROW(density_from_pure_mixture({{0.0, TwoQubitPure::up_up()}}), Error);
  EXPECT_THROW(density_from_pure_mixture({{-1.0, TwoQubitPure::up_up()}}), Error);
  EXPECT_NEAR(TwoQubitDensity::maximally_mixed().purity(), 0.25, 1e-15);
}

TEST(ProtocolResult, LookupBySignature) {
  ProtocolResult r;
  r.outcomes.push_back({{1, 0}, 0.3, std::nullopt, 0.0});
  r.outcomes.push_back({{0, 1}, 0.7, std::nullopt, 0.0});
  EXPECT_DOUBLE_EQ(r.probability_sum(), 1.0);
  EXPECT_DOUBLE_EQ(r.probability(0, 1), 0.7);
  EXPECT_EQ(r.find(2, 0), nullptr);
  EXPECT_EQ(Signature({2, 0}).str(), "(2,0)");
}

}  // namespace
}  // namespace wgent
