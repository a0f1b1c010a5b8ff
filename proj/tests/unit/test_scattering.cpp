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

#include <random>

#include "oracles.hpp"
#include "wgent/scattering.hpp"

namespace wgent {
namespace {

TEST(Transmission, LosslessIsAPhase) {
  const EmitterParams e(0.2, 0.8);
  for (double w : {-3.0, 0.0, 0.2, 0.5, 10.0}) EXPECT_NEAR(std::abs(transmission(w, e)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(transmission(0.2, e) + 1.0), 0.0, 1e-15);  // pi phase on resonance
  EXPECT_EQ(reservoir_transmission(0.3, e), cplx(0.0));
}

TEST(Transmission, GuidedPlusLeakedFluxIsOne) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const EmitterParams e(4 * u(rng) - 2, 0.1 + 3 * u(rng), 0.3 + 0.7 * u(rng));
    const double w = 6 * u(rng) - 3;
    const auto c = coefficients(w, e);
    EXPECT_NEAR(std::norm(c.t) + std::norm(c.t_r), 1.0, 1e-13);
    EXPECT_NEAR(std::abs(c.t - transmission(w, e)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.t_r - reservoir_transmission(w, e)), 0.0, 1e-15);
    // t = 1 - i sqrt(Gamma) s, t_r = -i sqrt(Gamma) s_r
    EXPECT_NEAR(std::abs(c.t - (1.0 - kI * std::sqrt(e.coupling()) * c.s)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c.t_r + kI * std::sqrt(e.coupling()) * c.s_r), 0.0, 1e-14);
  }
}

TEST(Transmission, MatchesIndependentFormula) {
  const EmitterParams e(0.0, 1.3, 0.85);
  const oracle::Emitter o{0.0, 1.3, 0.85};
  for (double w = -2.0; w <= 2.0; w += 0.37) {
    EXPECT_NEAR(std::abs(transmission(w, e) - oracle::trans(w, o)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(reservoir_transmission(w, e) - oracle::leak(w, o)), 0.0, 1e-14);
  }
}

TEST(PoleFunction, LineIntegral) {
  // int s(k) dk over [E - L, E + L] = -2i sqrt(Gamma) atan(2L / Gamma_tot) -> -i pi sqrt(Gamma)
  const EmitterParams e(0.4, 1.7, 0.9);
  quad::QuadratureSpec spec;
  spec.center = e.energy();
  spec.half_width = 1e6 * e.total_width();
  spec.features = {{e.energy(), 0.5 * e.total_width()}};
  spec.tolerance = 1e-12;
  const auto r = quad::integrate_1d([&](double k) { return pole_functions(k, e).first; }, spec);
  const cplx exact = -2.0 * kI * std::sqrt(e.coupling()) * std::atan(2.0 * spec.half_width / e.total_width());
  EXPECT_NEAR(std::abs(r.value - exact), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(r.value + kI * kPi * std::sqrt(e.coupling())), 0.0, 1e-5);
}

TEST(BoundState, KernelMatchesSimpson) {
  const EmitterParams e(0.0, 1.0);
  const auto p = SpectralProfile::gaussian(0.5, 0.8);
  const auto xi = JointEnvelope::identical(p);
  for (double total : {0.2, 1.0, 1.6}) {
    const cplx k = bound_state_integral(xi, e, total, 1e-10);
    const auto f = [&](double q) {
      return (pole_functions(q, e).first + pole_functions(total - q, e).first) * p(q) * p(total - q);
    };
    const cplx ref = oracle::simpson(f, -12.0, 12.0, 20000);
    EXPECT_NEAR(std::abs(k - ref), 0.0, 1e-9) << total;
  }
  // square envelopes far apart in energy never overlap
  const JointEnvelope apart{SpectralProfile::square(0.0, 0.1), SpectralProfile::square(5.0, 0.1)};
  EXPECT_EQ(bound_state_integral(apart, e, 1.0), cplx(0.0));
}

TEST(ScatteredEnvelope, SymmetricAndLossFree) {
  const EmitterParams lossless(0.0, 1.0), lossy(0.0, 1.0, 0.8);
  const auto xi = JointEnvelope::identical(SpectralProfile::gaussian(0.2, 1.0));
  const cplx a = scattered_envelope_guided(xi, lossy, 0.1, 0.9);
  const cplx b = scattered_envelope_guided(xi, lossy, 0.9, 0.1);
  EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12);
  EXPECT_EQ(scattered_envelope_reservoir(xi, lossless, 0.1, 0.9, ReservoirChannel::GuidedReservoir), cplx(0.0));
  EXPECT_NE(scattered_envelope_reservoir(xi, lossy, 0.1, 0.9, ReservoirChannel::ReservoirReservoir), cplx(0.0));
  // without the kernel the guided part is the product of transmissions
  const cplx lin = scattered_envelope_guided(xi, lossless, 0.1, 0.9, 0.0);
  EXPECT_NEAR(std::abs(lin - transmission(0.1, lossless) * transmission(0.9, lossless) * xi(0.1, 0.9)), 0.0, 1e-14);
}

TEST(LineSpecs, WindowsAndFeatures) {
  const EmitterParams e[] = {EmitterParams(0.0, 1.0), EmitterParams(1.0, 2.0)};
  const auto xi = JointEnvelope::identical(SpectralProfile::square(0.5, 1.0));
  const auto s = pair_line_spec(xi, e, 1.0);
  EXPECT_NEAR(s.lo(), 0.0, 1e-15);
  EXPECT_NEAR(s.hi(), 1.0, 1e-15);
  EXPECT_EQ(s.features.size(), 6u);
  EXPECT_TRUE(empty_window(pair_line_spec(xi, e, 5.0)));
  const auto wide = pair_plane_line_spec(xi, e, 1.0);
  EXPECT_LE(wide.lo(), -kEmitterTailWindow * 2.0);
  EXPECT_GE(wide.hi(), kEmitterTailWindow * 2.0);
}

}  // namespace
}  // namespace wgent
