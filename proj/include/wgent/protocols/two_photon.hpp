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

// Two photons, one per input arm: |1,1> = int xi(w, w') u^dag(w) d^dag(w') |0>.
//
// After the first splitter and scattering, the field is a sum of ten
// two-photon channels over the modes u, d and the reservoirs r1, r2 of the
// two emitters. Each channel carries a spin vector in the (uu, ud, du, dd)
// basis. The second splitter mixes u and d; the reservoirs are untouched.
// Outputs are collected per unordered mode pair and traced over frequency:
//
//   same mode  a a:  rho = 2 int int F_sym F_sym^dag
//   modes      a b:  rho =   int int F F^dag
//
// Detector signatures are sums of mode pairs, coarse-grained further for
// click detectors.

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"
#include "wgent/protocols/common.hpp"
#include "wgent/quadrature.hpp"
#include "wgent/scattering.hpp"

namespace wgent::protocols {

enum Mode : int { kU = 0, kD = 1, kR1 = 2, kR2 = 3 };

inline constexpr int kModePairs = 10;

/// Index of the unordered pair {a, b}, a <= b.
constexpr int pair_index(int a, int b) {
  constexpr int offset[4] = {0, 4, 7, 9};
  return offset[a] + (b - a);
}

/// Spin vectors of the ten scattered channels at (w, w'); the first listed
/// mode carries w.
struct Channels {
  Vector4c uu, dd, ud, ur1, ur2, r1d, dr2, r1r1, r1r2, r2r2;
};

/// Scalars needed to fill Channels at one frequency pair.
struct ChannelInputs {
  cplx x, xt;                   // xi(w,w'), xi(w',w)
  ScatterCoeffs e1, e1p, e2, e2p;  // emitter coefficients at w and w'
  cplx g1, g2;                  // guided envelopes
  cplx r1, r2;                  // guided x reservoir envelopes
  cplx rr1, rr2;                // reservoir x reservoir envelopes
};

inline Channels make_channels(const ChannelInputs& in) {
  const double q = 0.25;
  const cplx xs = 0.5 * (in.x + in.xt);
  const cplx dx = in.x - in.xt;
  const cplx z = 0.0;
  Channels c;
  c.uu = q * Vector4c{-in.g1, -in.g1, -xs, -xs};
  c.dd = q * Vector4c{in.g2, xs, in.g2, xs};
  c.ud = q * dx * Vector4c{in.e1.t * in.e2p.t, in.e1.t, in.e2p.t, 1.0};
  c.ur1 = q * Vector4c{-in.r1, -in.r1, z, z};
  c.ur2 = q * dx * Vector4c{in.e1.t * in.e2p.t_r, z, in.e2p.t_r, z};
  c.r1d = q * dx * Vector4c{in.e1.t_r * in.e2p.t, in.e1.t_r, z, z};
  c.dr2 = q * Vector4c{in.r2, z, in.r2, z};
  c.r1r1 = q * Vector4c{-in.rr1, -in.rr1, z, z};
  c.r1r2 = q * dx * Vector4c{in.e1.t_r * in.e2p.t_r, z, z, z};
  c.r2r2 = q * Vector4c{in.rr2, z, in.rr2, z};
  return c;
}

using ModeAmplitudes = std::array<Vector4c, kModePairs>;

namespace detail {

struct Branch {
  int mode;
  double coeff;
};

inline std::array<Branch, 2> second_splitter(int mode) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (mode) {
    case kU: return {{{kU, r}, {kD, -r}}};
    case kD: return {{{kU, r}, {kD, r}}};
    default: return {{{mode, 1.0}, {mode, 0.0}}};
  }
}

// Adds coeff * channel(a at w, b at w') into the output amplitudes at (w, w').
inline void route(ModeAmplitudes& out, int a, int b, const Vector4c& fwd, const Vector4c& rev) {
  for (const auto& ba : second_splitter(a)) {
    if (ba.coeff == 0.0) continue;
    for (const auto& bb : second_splitter(b)) {
      if (bb.coeff == 0.0) continue;
      const double c = ba.coeff * bb.coeff;
      if (ba.mode <= bb.mode) {
        out[static_cast<std::size_t>(pair_index(ba.mode, bb.mode))] += c * fwd;
      } else {
        out[static_cast<std::size_t>(pair_index(bb.mode, ba.mode))] += c * rev;
      }
    }
  }
}

}  // namespace detail

/// Output amplitudes at (w, w') after the second splitter, given the channels
/// at (w, w') and at (w', w).
inline ModeAmplitudes apply_second_splitter(const Channels& fwd, const Channels& rev) {
  ModeAmplitudes out;
  for (auto& v : out) v.setZero();
  detail::route(out, kU, kU, fwd.uu, rev.uu);
  detail::route(out, kD, kD, fwd.dd, rev.dd);
  detail::route(out, kU, kD, fwd.ud, rev.ud);
  detail::route(out, kU, kR1, fwd.ur1, rev.ur1);
  detail::route(out, kU, kR2, fwd.ur2, rev.ur2);
  detail::route(out, kR1, kD, fwd.r1d, rev.r1d);
  detail::route(out, kD, kR2, fwd.dr2, rev.dr2);
  detail::route(out, kR1, kR1, fwd.r1r1, rev.r1r1);
  detail::route(out, kR1, kR2, fwd.r1r2, rev.r1r2);
  detail::route(out, kR2, kR2, fwd.r2r2, rev.r2r2);
  return out;
}

inline constexpr bool same_mode_pair(int index) {
  return index == pair_index(kU, kU) || index == pair_index(kD, kD) || index == pair_index(kR1, kR1) ||
         index == pair_index(kR2, kR2);
}

/// Unnormalised heralded operators, one per output mode pair.
using PairOperators = std::array<Matrix4c, kModePairs>;

/// Adds the contribution of one (w, w') node with quadrature weight `w`.
inline void accumulate(PairOperators& rho, const ModeAmplitudes& fwd, const ModeAmplitudes& rev, double weight) {
  for (int k = 0; k < kModePairs; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (same_mode_pair(k)) {
      const Vector4c s = 0.5 * (fwd[i] + rev[i]);
      rho[i].noalias() += (2.0 * weight) * (s * s.adjoint());
    } else {
      rho[i].noalias() += weight * (fwd[i] * fwd[i].adjoint());
    }
  }
}

struct OutcomeGroup {
  Signature signature;
  std::vector<int> pairs;
};

inline std::vector<OutcomeGroup> outcome_groups(DetectorModel det) {
  const int uu = pair_index(kU, kU), dd = pair_index(kD, kD), ud = pair_index(kU, kD);
  const int ur1 = pair_index(kU, kR1), ur2 = pair_index(kU, kR2);
  const int dr1 = pair_index(kD, kR1), dr2 = pair_index(kD, kR2);
  const int r11 = pair_index(kR1, kR1), r12 = pair_index(kR1, kR2), r22 = pair_index(kR2, kR2);
  if (det == DetectorModel::NumberResolving) {
    return {{{2, 0}, {uu}}, {{0, 2}, {dd}},           {{1, 1}, {ud}},
            {{1, 0}, {ur1, ur2}}, {{0, 1}, {dr1, dr2}}, {{0, 0}, {r11, r12, r22}}};
  }
  return {{{1, 1}, {ud}}, {{1, 0}, {uu, ur1, ur2}}, {{0, 1}, {dd, dr1, dr2}}, {{0, 0}, {r11, r12, r22}}};
}

inline std::vector<DetectionOutcome> group_outcomes(const PairOperators& rho, DetectorModel det) {
  std::vector<DetectionOutcome> out;
  for (const auto& g : outcome_groups(det)) {
    Matrix4c m = Matrix4c::Zero();
    for (int k : g.pairs) m += rho[static_cast<std::size_t>(k)];
    out.push_back(outcome_from_operator(g.signature, m));
  }
  return out;
}

/// Identical monochromatic photons at omega, lossless emitters: the
/// bound state vanishes and every outcome heralds a pure state.
inline ProtocolResult two_photon_monochromatic_identical(const SystemParams& sys, double omega) {
  if (!sys.lossless()) {
    throw Error(ErrorKind::Unsupported, "protocols",
                "the closed-form two-photon path assumes beta = 1; use two_photon_monochromatic or the "
                "broadband engine for lossy emitters");
  }
  const cplx a = std::pow(transmission(omega, sys.first), 2);
  const cplx b = std::pow(transmission(omega, sys.second), 2);
  const TwoQubitPure same{b - a, 1.0 - a, b - 1.0, 0.0};
  const TwoQubitPure cross{a + b, 1.0 + a, 1.0 + b, 2.0};
  std::vector<DetectionOutcome> out;
  out.push_back(outcome_from_amplitudes({2, 0}, same, 1.0 / 32.0));
  out.push_back(outcome_from_amplitudes({0, 2}, same, 1.0 / 32.0));
  out.push_back(outcome_from_amplitudes({1, 1}, cross, 1.0 / 16.0));
  return finish(std::move(out), {1, 1, monochromatic_label(omega), DetectorModel::NumberResolving}, 1e-9);
}

/// Mode-pair operators for identical monochromatic photons with leakage.
/// With xi a symmetric delta, the linear scattering terms act at a single
/// frequency, the bound state drops out and the antisymmetric channels vanish.
inline PairOperators monochromatic_pair_operators(const SystemParams& sys, double omega) {
  ChannelInputs in;
  in.x = in.xt = 1.0;
  in.e1 = in.e1p = coefficients(omega, sys.first);
  in.e2 = in.e2p = coefficients(omega, sys.second);
  in.g1 = in.e1.t * in.e1.t;
  in.g2 = in.e2.t * in.e2.t;
  in.r1 = 2.0 * in.e1.t * in.e1.t_r;
  in.r2 = 2.0 * in.e2.t * in.e2.t_r;
  in.rr1 = in.e1.t_r * in.e1.t_r;
  in.rr2 = in.e2.t_r * in.e2.t_r;
  const Channels c = make_channels(in);
  const ModeAmplitudes f = apply_second_splitter(c, c);
  PairOperators rho;
  for (auto& m : rho) m.setZero();
  accumulate(rho, f, f, 1.0);
  return rho;
}

inline ProtocolResult two_photon_monochromatic(const SystemParams& sys, double omega,
                                               DetectorModel det = DetectorModel::NumberResolving) {
  if (sys.lossless() && det == DetectorModel::NumberResolving) {
    return two_photon_monochromatic_identical(sys, omega);
  }
  auto outcomes = group_outcomes(monochromatic_pair_operators(sys, omega), det);
  return finish(std::move(outcomes), {1, 1, monochromatic_label(omega), det}, 1e-9);
}

struct TwoPhotonOptions {
  /// Accepted change of the heralded operators between refinement levels.
  double tolerance = 1e-6;
  int max_rounds = 3;
  /// Base mesh density on both axes (see quad::QuadratureSpec).
  double core = 1.0;
  double grading = 1.5;
};

namespace detail {

// Part of a line window with w >= total/2, after closing it under w -> total - w.
inline quad::QuadratureSpec upper_half_line(quad::QuadratureSpec s, double total) {
  if (empty_window(s)) return s;
  const double mid = 0.5 * total;
  const double hi = std::max(s.hi(), total - s.lo());
  const std::size_t nf = s.features.size(), nb = s.breakpoints.size();
  for (std::size_t i = 0; i < nf; ++i) s.features.push_back({total - s.features[i].center, s.features[i].scale});
  for (std::size_t i = 0; i < nb; ++i) s.breakpoints.push_back(total - s.breakpoints[i]);
  s.center = 0.5 * (mid + hi);
  s.half_width = 0.5 * (hi - mid);
  return s;
}

}  // namespace detail

/// Frequency-integrated heralded operators at one refinement level.
///
/// Integration runs over W = w + w' (outer) and w (inner, w' = W - w). Only
/// w >= W/2 is sampled: the mirrored point contributes the swapped amplitudes.
/// The bound-state kernels K_1(W), K_2(W) are computed once per outer node
/// on the same inner mesh.
inline PairOperators broadband_pair_operators(const SystemParams& sys, const JointEnvelope& xi, int level,
                                              const TwoPhotonOptions& opt = {}) {
  const EmitterParams emitters[] = {sys.first, sys.second};

  quad::QuadratureSpec outer;
  {
    const auto [alo, ahi] = xi.a.support();
    const auto [blo, bhi] = xi.b.support();
    outer.center = 0.5 * (alo + ahi + blo + bhi);
    outer.half_width = 0.5 * (ahi - alo + bhi - blo);
    outer.panels = 8;
    outer.core = opt.core;
    outer.grading = opt.grading;
    std::vector<quad::Feature> base = {xi.a.feature(), xi.b.feature()};
    for (const auto& e : emitters) base.push_back({e.energy(), 0.5 * e.total_width()});
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        outer.features.push_back({base[i].center + base[j].center, std::min(base[i].scale, base[j].scale)});
      }
    }
    for (double p : xi.a.breakpoints()) {
      for (double q : xi.b.breakpoints()) outer.breakpoints.push_back(p + q);
    }
  }

  const double g1 = std::sqrt(sys.first.coupling()) / kPi;
  const double g2 = std::sqrt(sys.second.coupling()) / kPi;

  PairOperators rho;
  for (auto& m : rho) m.setZero();

  const quad::Nodes outer_nodes = quad::build_nodes(outer, level);
  std::array<Eigen::Matrix<cplx, 4, Eigen::Dynamic>, kModePairs> columns;
  for (std::size_t io = 0; io < outer_nodes.size(); ++io) {
    const double total = outer_nodes.x[io];
    const double w_outer = outer_nodes.w[io];
    auto inner = detail::upper_half_line(pair_plane_line_spec(xi, emitters, total), total);
    if (empty_window(inner)) continue;
    inner.core = opt.core;
    inner.grading = opt.grading;
    const quad::Nodes n = quad::build_nodes(inner, level);

    // Profile amplitudes and coefficients on the inner nodes.
    const std::size_t m = n.size();
    std::vector<cplx> xa(m), xb(m), xat(m), xbt(m);
    std::vector<ScatterCoeffs> c1(m), c2(m), c1p(m), c2p(m);
    cplx k1 = 0.0, k2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double w = n.x[i], wp = total - w;
      xa[i] = xi.a(w);
      xb[i] = xi.b(wp);
      xat[i] = xi.a(wp);
      xbt[i] = xi.b(w);
      c1[i] = coefficients(w, sys.first);
      c2[i] = coefficients(w, sys.second);
      c1p[i] = coefficients(wp, sys.first);
      c2p[i] = coefficients(wp, sys.second);
      const cplx pair = n.w[i] * (xa[i] * xb[i] + xat[i] * xbt[i]);
      k1 += (c1[i].s + c1p[i].s) * pair;
      k2 += (c2[i].s + c2p[i].s) * pair;
    }

    auto inputs = [&](std::size_t i, bool swapped) {
      ChannelInputs in;
      const ScatterCoeffs& a1 = swapped ? c1p[i] : c1[i];
      const ScatterCoeffs& b1 = swapped ? c1[i] : c1p[i];
      const ScatterCoeffs& a2 = swapped ? c2p[i] : c2[i];
      const ScatterCoeffs& b2 = swapped ? c2[i] : c2p[i];
      in.x = swapped ? xat[i] * xbt[i] : xa[i] * xb[i];
      in.xt = swapped ? xa[i] * xb[i] : xat[i] * xbt[i];
      in.e1 = a1;
      in.e1p = b1;
      in.e2 = a2;
      in.e2p = b2;
      const cplx sum = in.x + in.xt, sym = 0.5 * sum;
      in.g1 = a1.t * b1.t * sym + 0.5 * kI * g1 * a1.s * b1.s * k1;
      in.g2 = a2.t * b2.t * sym + 0.5 * kI * g2 * a2.s * b2.s * k2;
      in.r1 = a1.t * b1.t_r * sum + kI * g1 * a1.s * b1.s_r * k1;
      in.r2 = a2.t * b2.t_r * sum + kI * g2 * a2.s * b2.s_r * k2;
      in.rr1 = a1.t_r * b1.t_r * sym + 0.5 * kI * g1 * a1.s_r * b1.s_r * k1;
      in.rr2 = a2.t_r * b2.t_r * sym + 0.5 * kI * g2 * a2.s_r * b2.s_r * k2;
      return in;
    };

    // Weighted amplitudes as columns; one rank update per mode pair.
    const auto cols = static_cast<Eigen::Index>(m);
    for (std::size_t k = 0; k < kModePairs; ++k) {
      columns[k].resize(4, same_mode_pair(static_cast<int>(k)) ? cols : 2 * cols);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Channels fwd = make_channels(inputs(i, false));
      const Channels rev = make_channels(inputs(i, true));
      const ModeAmplitudes out_fwd = apply_second_splitter(fwd, rev);
      const ModeAmplitudes out_rev = apply_second_splitter(rev, fwd);
      const double root = std::sqrt(w_outer * n.w[i]);
      const auto col = static_cast<Eigen::Index>(i);
      for (std::size_t k = 0; k < kModePairs; ++k) {
        if (same_mode_pair(static_cast<int>(k))) {
          columns[k].col(col) = root * (out_fwd[k] + out_rev[k]);
        } else {
          columns[k].col(col) = root * out_fwd[k];
          columns[k].col(col + cols) = root * out_rev[k];
        }
      }
    }
    for (std::size_t k = 0; k < kModePairs; ++k) rho[k].noalias() += columns[k] * columns[k].adjoint();
  }
  return rho;
}

inline double max_difference(const PairOperators& a, const PairOperators& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, (a[k] - b[k]).cwiseAbs().maxCoeff());
  return d;
}

/// Broadband |1,1> with arbitrary separable envelope and lossy emitters.
inline ProtocolResult two_photon_broadband(const SystemParams& sys, const JointEnvelope& xi,
                                           DetectorModel det = DetectorModel::NumberResolving,
                                           TwoPhotonOptions opt = {}) {
  if (xi.a.is_monochromatic() || xi.b.is_monochromatic()) {
    if (!(xi.a.is_monochromatic() && xi.b.is_monochromatic() && xi.a.center() == xi.b.center())) {
      throw Error(ErrorKind::Unsupported, "protocols",
                  "monochromatic two-photon inputs must use identical frequencies in both arms");
    }
    return two_photon_monochromatic(sys, xi.a.center(), det);
  }
  // The first estimate comes from a mesh with panels twice as long; each
  // later round halves the panels of the default mesh.
  TwoPhotonOptions coarse = opt;
  coarse.core *= 2.0;
  coarse.grading *= 2.0;
  PairOperators previous = broadband_pair_operators(sys, xi, 0, coarse);
  for (int level = 0; level <= opt.max_rounds; ++level) {
    PairOperators now = broadband_pair_operators(sys, xi, level, opt);
    const double change = max_difference(now, previous);
    if (change <= opt.tolerance) {
      auto outcomes = group_outcomes(now, det);
      const std::string label = xi.a.describe() + "|" + xi.b.describe();
      return finish(std::move(outcomes), {1, 1, label, det}, 10.0 * opt.tolerance + 1e-6);
    }
    previous = std::move(now);
  }
  double p_prev = 0.0;
  for (const auto& m : previous) p_prev += m.trace().real();
  throw QuadratureError("protocols", "two-photon frequency integral did not converge", p_prev, p_prev);
}

}  // namespace wgent::protocols
