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

// One photon injected into the upper arm of the interferometer.
//
// Both emitters start in (up + down)/sqrt2. After the first splitter the
// photon scatters off emitter 1 (upper arm) or emitter 2 (lower arm); only the
// spin-up component of each emitter couples. The second splitter maps
// u -> (u - d)/sqrt2, d -> (u + d)/sqrt2, and detector D1 watches the u port.
//
// For lossy emitters the photon may leak into either emitter's reservoir.
// Those two leakage modes are orthogonal, so outcome (0,0) heralds their
// incoherent sum.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "wgent/domain.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/protocols/common.hpp"
#include "wgent/quadrature.hpp"
#include "wgent/scattering.hpp"

namespace wgent::protocols {

/// Unnormalised spin amplitudes attached to each output mode at one frequency.
struct SinglePhotonAmplitudes {
  Vector4c upper;      // detector D1
  Vector4c lower;      // detector D2
  Vector4c leak_first;   // reservoir of emitter 1
  Vector4c leak_second;  // reservoir of emitter 2
};

inline SinglePhotonAmplitudes single_photon_amplitudes(const SystemParams& sys, double omega) {
  const auto c1 = coefficients(omega, sys.first);
  const auto c2 = coefficients(omega, sys.second);
  const cplx t1 = c1.t, t2 = c2.t;
  const double q = 0.25;
  const double r = 1.0 / (2.0 * std::sqrt(2.0));
  SinglePhotonAmplitudes a;
  a.upper = q * Vector4c{t1 + t2, t1 + 1.0, 1.0 + t2, 2.0};
  a.lower = q * Vector4c{t2 - t1, 1.0 - t1, t2 - 1.0, 0.0};
  a.leak_first = r * c1.t_r * Vector4c{1.0, 1.0, 0.0, 0.0};
  a.leak_second = r * c2.t_r * Vector4c{1.0, 0.0, 1.0, 0.0};
  return a;
}

namespace detail {

inline ProtocolMetadata single_meta(std::string envelope) {
  return {1, 0, std::move(envelope), DetectorModel::NumberResolving};
}

inline TwoQubitPure to_pure(const Vector4c& v) { return {v(0), v(1), v(2), v(3)}; }

}  // namespace detail

inline ProtocolResult single_photon_monochromatic(const SystemParams& sys, double omega) {
  const auto a = single_photon_amplitudes(sys, omega);
  std::vector<DetectionOutcome> out;
  out.push_back(outcome_from_amplitudes({1, 0}, detail::to_pure(a.upper)));
  out.push_back(outcome_from_amplitudes({0, 1}, detail::to_pure(a.lower)));
  if (!sys.lossless()) {
    const Matrix4c loss = a.leak_first * a.leak_first.adjoint() + a.leak_second * a.leak_second.adjoint();
    out.push_back(outcome_from_operator({0, 0}, loss));
  }
  return finish(std::move(out), detail::single_meta(monochromatic_label(omega)), 1e-9);
}

struct BroadbandOptions {
  double tolerance = 1e-8;
  int max_rounds = 6;
};

/// rho_(p,q) = int dw |xi(w)|^2 |phi_(p,q)(w)><phi_(p,q)(w)|.
inline ProtocolResult single_photon_broadband(const SystemParams& sys, const SpectralProfile& profile,
                                              BroadbandOptions opt = {}) {
  if (profile.is_monochromatic()) return single_photon_monochromatic(sys, profile.center());
  auto spec = standard_spec(profile, opt.tolerance);
  spec.max_rounds = opt.max_rounds;
  for (const auto* e : {&sys.first, &sys.second}) spec.features.push_back({e->energy(), 0.5 * e->total_width()});
  using Block = Eigen::Matrix<cplx, 4, 12>;
  auto f = [&](double w) -> Block {
    const double weight = std::norm(profile(w));
    Block b = Block::Zero();
    if (weight == 0.0) return b;
    const auto a = single_photon_amplitudes(sys, w);
    b.block<4, 4>(0, 0) = weight * a.upper * a.upper.adjoint();
    b.block<4, 4>(0, 4) = weight * a.lower * a.lower.adjoint();
    b.block<4, 4>(0, 8) =
        weight * (a.leak_first * a.leak_first.adjoint() + a.leak_second * a.leak_second.adjoint());
    return b;
  };
  const Block rho = quad::integrate_1d(f, spec).value;
  std::vector<DetectionOutcome> out;
  out.push_back(outcome_from_operator({1, 0}, rho.block<4, 4>(0, 0)));
  out.push_back(outcome_from_operator({0, 1}, rho.block<4, 4>(0, 4)));
  if (!sys.lossless()) out.push_back(outcome_from_operator({0, 0}, rho.block<4, 4>(0, 8)));
  return finish(std::move(out), detail::single_meta(profile.describe()), 1e-6);
}

}  // namespace wgent::protocols
