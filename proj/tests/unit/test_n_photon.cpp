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

#include "expect.hpp"
#include "oracles.hpp"
#include "wgent/optimizer.hpp"
#include "wgent/protocols/n_photon.hpp"

namespace wgent::protocols {
namespace {

using testing_support::expect_matches;
using testing_support::to_oracle;

TEST(NPhotonTables, BeamSplitterPolynomials) {
  // |1,0>: (u + d)/sqrt2 -> f = (1, 1)/sqrt2
  const auto t = coefficient_tables(1, 1);
  EXPECT_NEAR(t.f[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.f[1], 1 / std::sqrt(2.0), 1e-15);
  // |1,1>: (u + d)(d - u)/sqrt2^2 = (d^2 - u^2)/2 -> f = (1/2, 0, -1/2)
  const auto t2 = coefficient_tables(2, 1);
  EXPECT_NEAR(t2.f[0], 0.5, 1e-15);
  EXPECT_NEAR(t2.f[1], 0.0, 1e-15);
  EXPECT_NEAR(t2.f[2], -0.5, 1e-15);
}

TEST(NPhotonTables, InputNormIsPreserved) {
  // sum_k |f_k|^2 k! (N-k)! = 1 for a normalised Fock input
  for (int n = 1; n <= 8; ++n) {
    for (int up = 0; up <= n; ++up) {
      const auto t = coefficient_tables(n, up);
      double s = 0.0;
      for (int k = 0; k <= n; ++k) s += t.f[k] * t.f[k] * detail::factorial(k) * detail::factorial(n - k);
      EXPECT_NEAR(s, 1.0, 1e-12) << n << "," << up;
    }
  }
}

TEST(NPhotonTables, Limits) {
  try {
    coefficient_tables(13, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
  EXPECT_NO_THROW(coefficient_tables(13, 6, 13));
  EXPECT_THROW(coefficient_tables(0, 0), Error);
  EXPECT_THROW(coefficient_tables(2, 3), Error);
}

TEST(NPhoton, MatchesFockOracle) {
  testing_support::RandomSystem gen(404);
  for (int total = 1; total <= 6; ++total) {
    for (int up = 0; up <= total; ++up) {
      for (int i = 0; i < 8; ++i) {
        const auto sys = gen.lossless();
        const double w = gen.frequency(sys);
        const auto ops = oracle::fock_operators(up, total - up, to_oracle(sys.first), to_oracle(sys.second), w);
        expect_matches(n_photon_monochromatic(up, total - up, sys, w), ops, 1e-11,
                       "|" + std::to_string(up) + "," + std::to_string(total - up) + ">");
      }
    }
  }
}

TEST(NPhoton, ReducesToDedicatedPaths) {
  testing_support::RandomSystem gen(505);
  for (int i = 0; i < 100; ++i) {
    const auto sys = gen.lossless();
    const double w = gen.frequency(sys);
    const auto one = n_photon_monochromatic(1, 0, sys, w);
    const auto one_ref = single_photon_monochromatic(sys, w);
    EXPECT_NEAR(one.c_avg, one_ref.c_avg, 1e-12);
    for (const auto& o : one_ref.outcomes) {
      EXPECT_NEAR(one.probability(o.signature.p, o.signature.q), o.probability, 1e-12);
    }
    const auto two = n_photon_monochromatic(1, 1, sys, w);
    const auto two_ref = two_photon_monochromatic(sys, w);
    EXPECT_NEAR(two.c_avg, two_ref.c_avg, 1e-12);
    for (const auto& o : two_ref.outcomes) {
      EXPECT_NEAR(two.probability(o.signature.p, o.signature.q), o.probability, 1e-12);
      const auto* m = two.find(o.signature.p, o.signature.q);
      ASSERT_NE(m, nullptr);
      EXPECT_NEAR(m->concurrence, o.concurrence, 1e-10);
    }
  }
}

TEST(NPhoton, RequiresLosslessEmitters) {
  const auto sys = SystemParams::from_detuning(0.0, 1.0, 0.9, 1.0, 1.0, 1.0);
  try {
    n_photon_monochromatic(2, 1, sys, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}

TEST(NPhoton, LowerArmInputMirrorsDetectors) {
  const auto sys = SystemParams::from_detuning(0.0, 1.0, 1.0, 0.8, 1.3, 1.0);
  const auto up = run_monochromatic({1, 0}, sys, 0.35);
  const auto down = run_monochromatic({0, 1}, sys, 0.35);
  const auto engine = n_photon_monochromatic(0, 1, sys, 0.35);
  EXPECT_NEAR(down.probability(0, 1), up.probability(1, 0), 1e-15);
  EXPECT_NEAR(engine.probability(0, 1), down.probability(0, 1), 1e-12);
  EXPECT_NEAR(engine.c_avg, down.c_avg, 1e-12);
}

}  // namespace
}  // namespace wgent::protocols
