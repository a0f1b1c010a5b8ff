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

#include <Eigen/Core>

#include <cmath>
#include <numbers>

#include "wgent/quadrature.hpp"

namespace wgent::quad {
namespace {

QuadratureSpec window(double lo, double hi) {
  QuadratureSpec s;
  s.center = 0.5 * (lo + hi);
  s.half_width = 0.5 * (hi - lo);
  return s;
}

TEST(GaussLegendre, ExactForDegreeFifteen) {
  const auto& r = gauss_legendre();
  for (int k = 0; k <= 15; ++k) {
    double sum = 0.0;
    for (int i = 0; i < kRuleOrder; ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(sum, exact, 1e-14) << "degree " << k;
  }
}

TEST(Panels, CoverWindowInOrder) {
  auto s = window(-3.0, 5.0);
  s.features = {{0.0, 0.01}};
  s.breakpoints = {1.2345};
  const auto p = build_panels(s, 2);
  ASSERT_FALSE(p.empty());
  EXPECT_DOUBLE_EQ(p.front().a, -3.0);
  EXPECT_DOUBLE_EQ(p.back().b, 5.0);
  bool saw_break = false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_DOUBLE_EQ(p[i].a, p[i - 1].b);
    saw_break |= p[i].a == 1.2345;
  }
  EXPECT_TRUE(saw_break);
  // panels touching the feature stay below its scale
  for (const auto& q : p) {
    if (q.a <= 0.0 && q.b >= 0.0) EXPECT_LE(q.b - q.a, 0.5 * 0.01 + 1e-15);
  }
}

TEST(Integrate1d, SmoothAndPeakedIntegrands) {
  auto s = window(0.0, std::numbers::pi);
  const auto r = integrate_1d([](double x) { return cplx(std::sin(x)); }, s);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-12);
  EXPECT_GT(r.rounds, 0);

  // Lorentzian of width 1e-3 on a wide window: graded mesh resolves it
  auto l = window(-1e3, 1e3);
  l.features = {{0.0, 1e-3}};
  l.tolerance = 1e-10;
  const double g = 1e-3;
  const auto lr = integrate_1d([g](double x) { return cplx(g / (x * x + g * g)); }, l);
  EXPECT_NEAR(lr.value.real(), 2.0 * std::atan(1e3 / g), 1e-8);
}

TEST(Integrate1d, MatrixValued) {
  using M = Eigen::Matrix<cplx, 2, 2>;
  const auto r = integrate_1d(
      [](double x) {
        M m;
        m << x, x * x, cplx(0, 1) * x, 1.0;
        return m;
      },
      window(0.0, 1.0));
  EXPECT_NEAR(std::abs(r.value(0, 0) - 0.5), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.value(0, 1) - 1.0 / 3.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.value(1, 0) - cplx(0, 0.5)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.value(1, 1) - 1.0), 0.0, 1e-14);
}

TEST(Integrate1d, ReportsNonConvergence) {
  auto s = window(0.0, 1.0);
  s.max_rounds = 1;
  s.tolerance = 1e-15;
  try {
    integrate_1d([](double x) { return cplx(std::sin(1e4 * x)); }, s);
    FAIL() << "expected a quadrature error";
  } catch (const QuadratureError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Numerical);
    EXPECT_NE(e.previous_estimate(), e.last_estimate());
  }
}

TEST(Integrate2d, SeparableProduct) {
  const auto r = integrate_2d([](double x, double y) { return cplx(std::exp(-x * x) * y * y); }, window(-8, 8),
                              window(0, 2));
  EXPECT_NEAR(r.value.real(), std::sqrt(std::numbers::pi) * 8.0 / 3.0, 1e-10);
}

TEST(QuadratureSpec, Validation) {
  QuadratureSpec s = window(0, 1);
  s.tolerance = 0.0;
  EXPECT_THROW(s.validate(), Error);
  s = window(0, 1);
  s.panels = 2;
  EXPECT_THROW(s.validate(), Error);
  s = window(0, 0);
  EXPECT_THROW(s.validate(), Error);
  s = window(0, 1);
  s.features = {{0.5, 0.0}};
  EXPECT_THROW(s.validate(), Error);
}

}  // namespace
}  // namespace wgent::quad
