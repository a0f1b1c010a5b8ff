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

// Composite Gauss-Legendre quadrature on graded panel meshes.
//
// A mesh covers a finite window. Panel boundaries are placed at explicit
// breakpoints (discontinuities of the integrand) and the mesh is bisected
// until every panel is no longer than
//
//     max(core * scale_f, grading * dist(panel, center_f))
//
// for every feature f. This keeps the panel count logarithmic in
// window/scale, so Lorentzian tails can be followed across many decades.
// Refinement level L splits every panel into 2^L equal parts; integrate_1d
// and integrate_2d raise L until successive estimates agree.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "wgent/errors.hpp"

namespace wgent::quad {

using cplx = std::complex<double>;

inline constexpr int kRuleOrder = 8;

struct Rule {
  std::array<double, kRuleOrder> nodes{};
  std::array<double, kRuleOrder> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev guess.
inline const Rule& gauss_legendre() {
  static const Rule rule = [] {
    Rule r;
    constexpr int n = kRuleOrder;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.nodes[static_cast<std::size_t>(i)] = x;
      r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

/// A point around which the integrand varies on length `scale`.
struct Feature {
  double center;
  double scale;
};

struct QuadratureSpec {
  double center = 0.0;
  double half_width = 1.0;
  /// Minimum number of equal panels covering the window.
  int panels = 64;
  /// Relative change between refinement rounds accepted as converged.
  double tolerance = 1e-6;
  int max_rounds = 6;
  /// Absolute change accepted regardless of the relative test.
  double absolute_tolerance = 0.0;
  std::vector<Feature> features;
  std::vector<double> breakpoints;
  double core = 0.5;
  double grading = 0.75;

  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }

  void validate() const {
    if (!(tolerance > 0.0)) throw Error(ErrorKind::Parameter, "quadrature", "tolerance must be positive");
    if (panels < 8) throw Error(ErrorKind::Parameter, "quadrature", "at least 8 panels are required");
    if (!(half_width > 0.0) || !std::isfinite(half_width) || !std::isfinite(center)) {
      throw Error(ErrorKind::Parameter, "quadrature", "window must be finite with positive half-width");
    }
    if (max_rounds < 0) throw Error(ErrorKind::Parameter, "quadrature", "max_rounds must be non-negative");
    for (const auto& f : features) {
      if (!(f.scale > 0.0)) throw Error(ErrorKind::Parameter, "quadrature", "feature scale must be positive");
    }
  }
};

struct Panel {
  double a;
  double b;
};

namespace detail {

inline double distance_to(double a, double b, double c) {
  if (c < a) return a - c;
  if (c > b) return c - b;
  return 0.0;
}

inline bool acceptable(const Panel& p, const QuadratureSpec& s) {
  const double len = p.b - p.a;
  for (const auto& f : s.features) {
    const double allowed = std::max(s.core * f.scale, s.grading * distance_to(p.a, p.b, f.center));
    if (len > allowed) return false;
  }
  return true;
}

}  // namespace detail

/// Panels for refinement level `level`, ordered left to right.
inline std::vector<Panel> build_panels(const QuadratureSpec& s, int level = 0) {
  s.validate();
  const double lo = s.lo(), hi = s.hi();
  std::vector<double> cuts;
  cuts.reserve(static_cast<std::size_t>(s.panels) + s.breakpoints.size() + 2);
  for (int i = 0; i <= s.panels; ++i) cuts.push_back(lo + (hi - lo) * i / s.panels);
  for (double b : s.breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  const double eps = 1e-14 * std::max({std::abs(lo), std::abs(hi), hi - lo});
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [eps](double x, double y) { return y - x <= eps; }),
             cuts.end());

  std::vector<Panel> out;
  // Depth-first bisection keeping left-to-right order.
  std::vector<Panel> work;
  for (std::size_t i = cuts.size() - 1; i > 0; --i) work.push_back({cuts[i - 1], cuts[i]});
  while (!work.empty()) {
    Panel p = work.back();
    work.pop_back();
    if (detail::acceptable(p, s) || (p.b - p.a) <= eps) {
      out.push_back(p);
    } else {
      const double m = 0.5 * (p.a + p.b);
      work.push_back({m, p.b});
      work.push_back({p.a, m});
    }
  }
  if (level > 0) {
    const int split = 1 << level;
    std::vector<Panel> fine;
    fine.reserve(out.size() * static_cast<std::size_t>(split));
    for (const auto& p : out) {
      const double h = (p.b - p.a) / split;
      for (int k = 0; k < split; ++k) fine.push_back({p.a + k * h, k + 1 == split ? p.b : p.a + (k + 1) * h});
    }
    out.swap(fine);
  }
  return out;
}

/// Flattened nodes and weights of a mesh.
struct Nodes {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

inline Nodes build_nodes(const QuadratureSpec& s, int level = 0) {
  const auto panels = build_panels(s, level);
  const Rule& r = gauss_legendre();
  Nodes n;
  n.x.reserve(panels.size() * kRuleOrder);
  n.w.reserve(panels.size() * kRuleOrder);
  for (const auto& p : panels) {
    const double mid = 0.5 * (p.a + p.b), half = 0.5 * (p.b - p.a);
    for (int i = 0; i < kRuleOrder; ++i) {
      n.x.push_back(mid + half * r.nodes[static_cast<std::size_t>(i)]);
      n.w.push_back(half * r.weights[static_cast<std::size_t>(i)]);
    }
  }
  return n;
}

template <class T = cplx>
struct QuadratureResult {
  T value;
  /// Size of I_L - I_{L-1} at acceptance (max-abs entry for matrices).
  double error_estimate = 0.0;
  int rounds = 0;
  std::size_t evaluations = 0;
};

namespace detail {

inline double magnitude(cplx v) { return std::abs(v); }
inline double magnitude(double v) { return std::abs(v); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <class T>
T zero() {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, cplx>) {
    return T{};
  } else {
    return T::Zero();
  }
}

inline bool converged(double change, double now, double l1, const QuadratureSpec& s) {
  return change <= s.tolerance * now || change <= 1e-13 * l1 || change <= s.absolute_tolerance;
}

}  // namespace detail

/// Integral of f over the window of `spec`, refined by panel doubling.
/// f may return a scalar or a fixed-size Eigen matrix.
template <class F>
auto integrate_1d(F&& f, const QuadratureSpec& spec) {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  QuadratureResult<T> res{detail::zero<T>()};
  T previous = detail::zero<T>();
  for (int level = 0; level <= spec.max_rounds; ++level) {
    const Nodes n = build_nodes(spec, level);
    T sum = detail::zero<T>();
    double l1 = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const T v = f(n.x[i]);
      sum += n.w[i] * v;
      l1 += n.w[i] * detail::magnitude(v);
    }
    res.evaluations += n.size();
    const T diff = sum - previous;
    const double change = detail::magnitude(diff);
    if (level > 0 && detail::converged(change, detail::magnitude(sum), l1, spec)) {
      res.value = sum;
      res.error_estimate = change;
      res.rounds = level;
      return res;
    }
    if (level == spec.max_rounds) {
      throw QuadratureError("quadrature",
                            "1-D integral did not converge after " + std::to_string(spec.max_rounds) +
                                " refinements",
                            detail::magnitude(previous), detail::magnitude(sum));
    }
    previous = sum;
  }
  return res;
}

/// Tensor-product integral of f(x, y); both meshes are refined together.
template <class F>
auto integrate_2d(F&& f, const QuadratureSpec& spec_x, const QuadratureSpec& spec_y) {
  using T = std::decay_t<std::invoke_result_t<F&, double, double>>;
  spec_x.validate();
  spec_y.validate();
  const int rounds = std::min(spec_x.max_rounds, spec_y.max_rounds);
  QuadratureSpec crit = spec_x;
  crit.tolerance = std::max(spec_x.tolerance, spec_y.tolerance);
  crit.absolute_tolerance = std::max(spec_x.absolute_tolerance, spec_y.absolute_tolerance);
  QuadratureResult<T> res{detail::zero<T>()};
  T previous = detail::zero<T>();
  for (int level = 0; level <= rounds; ++level) {
    const Nodes nx = build_nodes(spec_x, level);
    const Nodes ny = build_nodes(spec_y, level);
    T sum = detail::zero<T>();
    double l1 = 0.0;
    for (std::size_t i = 0; i < nx.size(); ++i) {
      T row = detail::zero<T>();
      double row_l1 = 0.0;
      for (std::size_t j = 0; j < ny.size(); ++j) {
        const T v = f(nx.x[i], ny.x[j]);
        row += ny.w[j] * v;
        row_l1 += ny.w[j] * detail::magnitude(v);
      }
      sum += nx.w[i] * row;
      l1 += nx.w[i] * row_l1;
    }
    res.evaluations += nx.size() * ny.size();
    const T diff = sum - previous;
    const double change = detail::magnitude(diff);
    if (level > 0 && detail::converged(change, detail::magnitude(sum), l1, crit)) {
      res.value = sum;
      res.error_estimate = change;
      res.rounds = level;
      return res;
    }
    if (level == rounds) {
      throw QuadratureError("quadrature", "2-D integral did not converge", detail::magnitude(previous),
                            detail::magnitude(sum));
    }
    previous = sum;
  }
  return res;
}

}  // namespace wgent::quad
