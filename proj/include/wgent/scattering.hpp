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

// Single-photon scattering coefficients of a chirally coupled emitter and the
// scattered two-photon envelopes, including the bound-state and leakage
// (reservoir) channels.
//
// With d(w) = w - E + i(Gamma + gamma)/2:
//   t   = (w - E - i(Gamma - gamma)/2) / d
//   t_r = -i sqrt(Gamma gamma) / d
//   s   = sqrt(Gamma) / d
//   s_r = sqrt(gamma) / d
//
// The bound-state kernel depends on (w, w') only through the total energy
// W = w + w':
//   K(W) = int dk [s(k) + s(W - k)] xi_a(k) xi_b(W - k).

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"
#include "wgent/quadrature.hpp"

namespace wgent {

struct ScatterCoeffs {
  cplx t;
  cplx t_r;
  cplx s;
  cplx s_r;
};

namespace detail {
inline cplx pole_denominator(double omega, const EmitterParams& e) {
  return {omega - e.energy(), 0.5 * e.total_width()};
}
}  // namespace detail

inline cplx transmission(double omega, const EmitterParams& e) {
  const double x = omega - e.energy();
  return cplx(x, -0.5 * (e.coupling() - e.loss())) / cplx(x, 0.5 * e.total_width());
}

inline cplx reservoir_transmission(double omega, const EmitterParams& e) {
  return -kI * std::sqrt(e.coupling() * e.loss()) / detail::pole_denominator(omega, e);
}

/// (s, s_r)
inline std::pair<cplx, cplx> pole_functions(double omega, const EmitterParams& e) {
  const cplx inv = 1.0 / detail::pole_denominator(omega, e);
  return {std::sqrt(e.coupling()) * inv, std::sqrt(e.loss()) * inv};
}

inline ScatterCoeffs coefficients(double omega, const EmitterParams& e) {
  const double x = omega - e.energy();
  const cplx inv = 1.0 / cplx(x, 0.5 * e.total_width());
  return {cplx(x, -0.5 * (e.coupling() - e.loss())) * inv, -kI * std::sqrt(e.coupling() * e.loss()) * inv,
          std::sqrt(e.coupling()) * inv, std::sqrt(e.loss()) * inv};
}

/// Quadrature window for functions of k supported where both xi_a(k) and
/// xi_b(total - k) are non-negligible, with mesh features at the profile
/// centres and at the emitter poles seen from either photon.
inline quad::QuadratureSpec pair_line_spec(const JointEnvelope& xi, std::span<const EmitterParams> emitters,
                                           double total, double tolerance = 1e-6) {
  const auto [alo, ahi] = xi.a.support();
  const auto [blo, bhi] = xi.b.support();
  const double lo = std::max(alo, total - bhi);
  const double hi = std::min(ahi, total - blo);
  quad::QuadratureSpec s;
  s.tolerance = tolerance;
  s.panels = 8;
  if (!(hi > lo)) {
    s.center = 0.5 * (lo + hi);
    s.half_width = 0.0;
    return s;
  }
  s.center = 0.5 * (lo + hi);
  s.half_width = 0.5 * (hi - lo);
  s.features.push_back(xi.a.feature());
  const auto fb = xi.b.feature();
  s.features.push_back({total - fb.center, fb.scale});
  for (const auto& e : emitters) {
    const double w = 0.5 * e.total_width();
    s.features.push_back({e.energy(), w});
    s.features.push_back({total - e.energy(), w});
  }
  s.breakpoints = xi.a.breakpoints();
  for (double b : xi.b.breakpoints()) s.breakpoints.push_back(total - b);
  return s;
}

/// Half-width, in units of the emitter linewidth, kept for functions that
/// decay like the emitter line shape (bound-state tails).
inline constexpr double kEmitterTailWindow = 1e6;

/// Window along w at fixed total energy W covering both the support of
/// xi_a(w) xi_b(W - w) and the emitter tails of the bound-state term
/// s(w) s(W - w) K(W). Empty when the envelope has no weight at this W.
inline quad::QuadratureSpec pair_plane_line_spec(const JointEnvelope& xi, std::span<const EmitterParams> emitters,
                                                 double total, double tolerance = 1e-6) {
  auto s = pair_line_spec(xi, emitters, total, tolerance);
  if (!(s.half_width > 0.0)) return s;
  double lo = s.lo(), hi = s.hi();
  for (const auto& e : emitters) {
    const double reach = kEmitterTailWindow * e.total_width();
    lo = std::min({lo, e.energy() - reach, total - e.energy() - reach});
    hi = std::max({hi, e.energy() + reach, total - e.energy() + reach});
  }
  s.center = 0.5 * (lo + hi);
  s.half_width = 0.5 * (hi - lo);
  return s;
}

/// True when the window produced by pair_line_spec is empty.
inline bool empty_window(const quad::QuadratureSpec& s) { return !(s.half_width > 0.0); }

/// K(total) for one emitter, integrated adaptively.
inline cplx bound_state_integral(const JointEnvelope& xi, const EmitterParams& e, double total,
                                 double tolerance = 1e-6) {
  const EmitterParams one[] = {e};
  auto spec = pair_line_spec(xi, one, total, tolerance);
  if (empty_window(spec)) return 0.0;
  spec.absolute_tolerance = 1e-14;
  auto f = [&](double k) {
    const double kp = total - k;
    return (pole_functions(k, e).first + pole_functions(kp, e).first) * xi.a(k) * xi.b(kp);
  };
  return quad::integrate_1d(f, spec).value;
}

/// Guided-guided envelope given a precomputed kernel K(w + w').
inline cplx scattered_envelope_guided(const JointEnvelope& xi, const EmitterParams& e, double w, double wp,
                                      cplx kernel) {
  const auto c = coefficients(w, e);
  const auto cp = coefficients(wp, e);
  const cplx sym = 0.5 * (xi(w, wp) + xi(wp, w));
  return c.t * cp.t * sym + 0.5 * kI * (std::sqrt(e.coupling()) / kPi) * c.s * cp.s * kernel;
}

inline cplx scattered_envelope_guided(const JointEnvelope& xi, const EmitterParams& e, double w, double wp) {
  return scattered_envelope_guided(xi, e, w, wp, bound_state_integral(xi, e, w + wp));
}

enum class ReservoirChannel { GuidedReservoir, ReservoirReservoir };

/// Leakage envelopes. GuidedReservoir: the first photon stays guided, the
/// second ends in the emitter's reservoir. The linear part is
/// t(w) t_r(w') [xi(w,w') + xi(w',w)] and the bound part carries the same
/// i/pi factor as the other channels; both follow from the flux balance
/// sum_channels int |.|^2 = 1.
inline cplx scattered_envelope_reservoir(const JointEnvelope& xi, const EmitterParams& e, double w, double wp,
                                         ReservoirChannel which, cplx kernel) {
  const auto c = coefficients(w, e);
  const auto cp = coefficients(wp, e);
  const cplx sum = xi(w, wp) + xi(wp, w);
  const double g = std::sqrt(e.coupling()) / kPi;
  if (which == ReservoirChannel::GuidedReservoir) {
    return c.t * cp.t_r * sum + kI * g * c.s * cp.s_r * kernel;
  }
  return 0.5 * c.t_r * cp.t_r * sum + 0.5 * kI * g * c.s_r * cp.s_r * kernel;
}

inline cplx scattered_envelope_reservoir(const JointEnvelope& xi, const EmitterParams& e, double w, double wp,
                                         ReservoirChannel which) {
  if (e.lossless()) return 0.0;
  return scattered_envelope_reservoir(xi, e, w, wp, which, bound_state_integral(xi, e, w + wp));
}

}  // namespace wgent
