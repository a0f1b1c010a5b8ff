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

// Helpers shared by the protocol pipelines: outcome construction from
// unnormalised heralded operators and final bookkeeping.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/entanglement.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"

namespace wgent::protocols {

/// Outcome from an unnormalised heralded operator whose trace is Pr(p,q).
inline DetectionOutcome outcome_from_operator(Signature sig, const Matrix4c& rho) {
  DetectionOutcome o;
  o.signature = sig;
  o.probability = std::max(0.0, rho.trace().real());
  if (o.probability > kNegligibleProbability) {
    o.state = TwoQubitDensity::from_unnormalized(rho);
    o.concurrence = concurrence_mixed(*o.state);
  }
  return o;
}

/// Outcome heralding a pure state; |amp|^2 summed gives Pr(p,q) times `scale`.
inline DetectionOutcome outcome_from_amplitudes(Signature sig, const TwoQubitPure& amp, double scale = 1.0) {
  DetectionOutcome o;
  o.signature = sig;
  o.probability = scale * amp.norm_squared();
  if (o.probability > kNegligibleProbability) {
    const auto psi = amp.normalized();
    o.state = TwoQubitDensity::from_pure(psi);
    o.concurrence = concurrence_pure(psi);
  }
  return o;
}

inline ProtocolResult finish(std::vector<DetectionOutcome> outcomes, ProtocolMetadata meta,
                             double tolerance) {
  ProtocolResult r;
  r.outcomes = std::move(outcomes);
  r.metadata = std::move(meta);
  r.c_avg = average_concurrence(r, tolerance);
  return r;
}

inline std::string monochromatic_label(double omega) {
  return SpectralProfile::monochromatic(omega).describe();
}

}  // namespace wgent::protocols
