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

#include <numbers>

#include "wgent/envelopes.hpp"

namespace wgent {
namespace {

class ProfileNorm : public ::testing::TestWithParam<std::tuple<ProfileKind, double>> {};

TEST_P(ProfileNorm, UnitIntensity) {
  const auto [kind, sigma] = GetParam();
  const auto p = SpectralProfile::make(kind, 0.37, sigma);
  // the Lorentzian window drops about 1/(pi * 1e9) of the weight
  EXPECT_NEAR(intensity_norm(p), 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, ProfileNorm,
                         ::testing::Combine(::testing::Values(ProfileKind::Lorentzian, ProfileKind::Gaussian,
                                                             ProfileKind::Square),
                                            ::testing::Values(0.01, 0.5, 4.0)));

TEST(SpectralProfile, WidthIsFullWidthAtHalfMaximum) {
  for (auto kind : {ProfileKind::Lorentzian, ProfileKind::Gaussian}) {
    const auto p = SpectralProfile::make(kind, 1.0, 0.6);
    const double peak = std::norm(p(1.0));
    EXPECT_NEAR(std::norm(p(1.3)) / peak, 0.5, 1e-12) << to_string(kind);
    EXPECT_NEAR(std::norm(p(0.7)) / peak, 0.5, 1e-12) << to_string(kind);
  }
  const auto sq = SpectralProfile::square(1.0, 0.6);
  EXPECT_NEAR(std::norm(sq(1.29)), 1.0 / 0.6, 1e-12);
  EXPECT_EQ(sq(1.31), cplx(0.0));
  ASSERT_EQ(sq.breakpoints().size(), 2u);
  EXPECT_DOUBLE_EQ(sq.breakpoints()[0], 0.7);
}

TEST(SpectralProfile, LorentzianIsAnEmitterLineShape) {
  // i sqrt(sigma / 2 pi) / (x + i sigma / 2)
  const double s = 0.4;
  const auto p = SpectralProfile::lorentzian(0.0, s);
  const cplx x = 0.3;
  const cplx expect = cplx(0, 1) * std::sqrt(s / (2 * std::numbers::pi)) / (x + cplx(0, s / 2));
  EXPECT_NEAR(std::abs(p(0.3) - expect), 0.0, 1e-15);
}

TEST(SpectralProfile, MonochromaticHasNoPointwiseValue) {
  const auto m = SpectralProfile::monochromatic(0.5);
  try {
    (void)m(0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Misuse);
  }
  EXPECT_TRUE(m.is_monochromatic());
  EXPECT_EQ(m.describe(), "monochromatic:0.5");
}

TEST(SpectralProfile, RejectsBadWidths) {
  EXPECT_THROW(SpectralProfile::gaussian(0.0, 0.0), Error);
  EXPECT_THROW(SpectralProfile::square(0.0, -1.0), Error);
  EXPECT_THROW(SpectralProfile::lorentzian(std::nan(""), 1.0), Error);
}

TEST(ParseProfile, Grammar) {
  const auto g = parse_profile("gaussian:0.5:1.25");
  EXPECT_EQ(g.kind(), ProfileKind::Gaussian);
  EXPECT_DOUBLE_EQ(g.center(), 0.5);
  EXPECT_DOUBLE_EQ(g.sigma(), 1.25);
  EXPECT_EQ(parse_profile("box:1:2").kind(), ProfileKind::Square);
  EXPECT_EQ(parse_profile("lorentz:1:2").kind(), ProfileKind::Lorentzian);
  EXPECT_TRUE(parse_profile("mono:3").is_monochromatic());
  EXPECT_EQ(parse_profile(g.describe()).sigma(), g.sigma());
  for (const char* bad : {"gaussian", "gaussian:0.5", "cauchy:0:1", "square:x:1", "gaussian:0:0"}) {
    EXPECT_THROW(parse_profile(bad), Error) << bad;
  }
}

TEST(JointEnvelope, ExchangeSymmetry) {
  const auto a = SpectralProfile::gaussian(0.0, 1.0);
  const auto b = SpectralProfile::gaussian(0.3, 1.0);
  EXPECT_TRUE(JointEnvelope::identical(a).exchange_symmetric());
  const JointEnvelope xi{a, b};
  EXPECT_FALSE(xi.exchange_symmetric());
  EXPECT_NEAR(std::abs(JointEnvelope::identical(a).antisymmetric_part(0.1, 0.7)), 0.0, 1e-15);
  EXPECT_GT(std::abs(xi.antisymmetric_part(0.1, 0.7)), 1e-3);
  EXPECT_NEAR(std::abs(xi(0.1, 0.7) - a(0.1) * b(0.7)), 0.0, 1e-15);
}

}  // namespace
}  // namespace wgent
