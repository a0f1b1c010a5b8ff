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

#pragma once

// Assertions comparing a protocol result with oracle operators.

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <utility>

#include "oracles.hpp"
#include "wgent/domain.hpp"

namespace testing_support {

inline oracle::Emitter to_oracle(const wgent::EmitterParams& e) { return {e.energy(), e.coupling(), e.beta()}; }

/// Every oracle outcome must appear with the same probability, state and
/// concurrence; outcomes the oracle never produces must have zero weight.
inline void expect_matches(const wgent::ProtocolResult& r, const std::map<std::pair<int, int>, oracle::Mat4>& ops,
                           double tol, const std::string& what = {}) {
  SCOPED_TRACE(what);
  double total = 0.0;
  for (const auto& [sig, rho] : ops) {
    const double p = rho.trace().real();
    total += p;
    EXPECT_NEAR(r.probability(sig.first, sig.second), p, tol) << "Pr" << sig.first << sig.second;
    const auto* o = r.find(sig.first, sig.second);
    if (p > 1e-9) {
      ASSERT_NE(o, nullptr) << "missing (" << sig.first << "," << sig.second << ")";
      ASSERT_TRUE(o->state.has_value());
      EXPECT_LE((o->state->matrix() - rho / p).cwiseAbs().maxCoeff(), tol / p);
      EXPECT_NEAR(o->concurrence, oracle::concurrence_sqrt(rho / p), 1e3 * tol / p + 1e-9);
    }
  }
  for (const auto& o : r.outcomes) {
    if (!ops.count({o.signature.p, o.signature.q})) EXPECT_NEAR(o.probability, 0.0, tol) << o.signature.str();
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(r.c_avg, oracle::average_concurrence(ops), 1e3 * tol + 1e-9);
}

struct RandomSystem {
  std::mt19937_64 rng;
  explicit RandomSystem(std::uint64_t seed) : rng(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

  wgent::SystemParams next(double beta_min = 0.5) {
    return wgent::SystemParams::from_detuning(uniform(-1, 1), uniform(0.2, 3.0), uniform(beta_min, 1.0),
                                              uniform(-3, 3), uniform(0.2, 3.0), uniform(beta_min, 1.0));
  }
  wgent::SystemParams lossless() { return next(1.0); }
  double frequency(const wgent::SystemParams& s) {
    const double lo = std::min(s.first.energy(), s.second.energy()) - 2.0;
    const double hi = std::max(s.first.energy(), s.second.energy()) + 2.0;
    return uniform(lo, hi);
  }
};

}  // namespace testing_support
