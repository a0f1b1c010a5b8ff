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

// Photon-frequency optimisation of the average concurrence and the
// (detuning, linewidth-ratio) sweep built on it.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/errors.hpp"
#include "wgent/protocols/n_photon.hpp"
#include "wgent/protocols/single_photon.hpp"
#include "wgent/protocols/two_photon.hpp"

namespace wgent {

/// Fock input |n, m>: n photons in the upper arm, m in the lower arm.
struct FockInput {
  int upper = 1;
  int lower = 0;
  int total() const { return upper + lower; }
  std::string str() const { return "|" + std::to_string(upper) + "," + std::to_string(lower) + ">"; }
};

namespace detail {

// A photon entering the lower arm leaves through the opposite detector with
// the same heralded states as one entering the upper arm.
inline ProtocolResult swap_detectors(ProtocolResult r) {
  for (auto& o : r.outcomes) std::swap(o.signature.p, o.signature.q);
  std::swap(r.metadata.photons_upper, r.metadata.photons_lower);
  return r;
}

}  // namespace detail

/// Monochromatic run of any supported Fock input.
inline ProtocolResult run_monochromatic(FockInput in, const SystemParams& sys, double omega,
                                        DetectorModel det = DetectorModel::NumberResolving,
                                        int cap = protocols::kDefaultPhotonCap) {
  if (in.upper < 0 || in.lower < 0 || in.total() < 1) {
    throw Error(ErrorKind::Parameter, "optimizer", "input must hold at least one photon");
  }
  if (in.total() == 1) {
    if (in.upper == 1) return protocols::single_photon_monochromatic(sys, omega);
    return detail::swap_detectors(protocols::single_photon_monochromatic(sys, omega));
  }
  if (in.upper == 1 && in.lower == 1) return protocols::two_photon_monochromatic(sys, omega, det);
  return protocols::n_photon_monochromatic(in.upper, in.lower, sys, omega, cap);
}

struct FrequencySearch {
  double lo = 0.0;
  double hi = 1.0;
  int coarse_points = 241;
  /// Golden-section termination width (ueV).
  double tolerance = 1e-4;
  /// Coarse cells refined; the best refined value wins.
  int refine_cells = 3;

  /// [min(E) - k Gamma_max, max(E) + k Gamma_max] with total widths.
  static FrequencySearch around(const SystemParams& sys, double widths = 3.0) {
    const double g = sys.max_total_width();
    const double e_lo = std::min(sys.first.energy(), sys.second.energy());
    const double e_hi = std::max(sys.first.energy(), sys.second.energy());
    return {e_lo - widths * g, e_hi + widths * g};
  }

  void validate() const {
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw Error(ErrorKind::Parameter, "optimizer", "degenerate frequency window");
    }
    if (coarse_points < 3) throw Error(ErrorKind::Parameter, "optimizer", "need at least 3 coarse points");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::Parameter, "optimizer", "tolerance must be positive");
  }
};

struct FrequencyOptimum {
  double omega = 0.0;
  double c_max = 0.0;
  /// The optimum sits on (within one tolerance of) the window edge.
  bool at_boundary = false;
};

inline constexpr double kTieTolerance = 1e-9;

/// Coarse scan then golden-section refinement around the best coarse cells.
/// Ties within kTieTolerance resolve to the smallest omega.
template <class F>
FrequencyOptimum optimize_frequency(F&& objective, const FrequencySearch& search) {
  search.validate();
  const int n = search.coarse_points;
  const double step = (search.hi - search.lo) / (n - 1);
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = i + 1 == n ? search.hi : search.lo + i * step;
    ys[static_cast<std::size_t>(i)] = objective(xs[static_cast<std::size_t>(i)]);
  }

  FrequencyOptimum best{xs[0], ys[0], false};
  auto consider = [&best](double x, double y) {
    if (y > best.c_max + kTieTolerance || (std::abs(y - best.c_max) <= kTieTolerance && x < best.omega)) {
      best.omega = x;
      best.c_max = y;
    }
  };
  for (int i = 0; i < n; ++i) consider(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);

  // Local maxima of the coarse scan, best first.
  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    const double y = ys[static_cast<std::size_t>(i)];
    const bool left = i == 0 || y >= ys[static_cast<std::size_t>(i - 1)];
    const bool right = i + 1 == n || y >= ys[static_cast<std::size_t>(i + 1)];
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&ys](int a, int b) { return ys[static_cast<std::size_t>(a)] > ys[static_cast<std::size_t>(b)]; });
  if (static_cast<int>(peaks.size()) > search.refine_cells) peaks.resize(static_cast<std::size_t>(search.refine_cells));

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i : peaks) {
    double a = xs[static_cast<std::size_t>(std::max(0, i - 1))];
    double b = xs[static_cast<std::size_t>(std::min(n - 1, i + 1))];
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > search.tolerance) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = objective(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = objective(d);
      }
    }
    consider(c, fc);
    consider(d, fd);
  }
  best.at_boundary =
      best.omega - search.lo <= search.tolerance || search.hi - best.omega <= search.tolerance;
  return best;
}

/// Optimum of C_avg over omega for a monochromatic Fock input.
inline FrequencyOptimum optimize_frequency(FockInput in, const SystemParams& sys, const FrequencySearch& search,
                                           DetectorModel det = DetectorModel::NumberResolving) {
  return optimize_frequency([&](double w) { return run_monochromatic(in, sys, w, det).c_avg; }, search);
}

struct SweepCell {
  double delta_over_g1 = 0.0;
  double g2_over_g1 = 0.0;
  double c_max = 0.0;
  /// (omega_opt - E1) / Gamma1
  double omega_opt_over_g1 = 0.0;
  bool at_boundary = false;
  /// Outcome probabilities at the optimum, in protocol order.
  std::vector<std::pair<Signature, double>> outcomes;
  std::optional<std::string> error;
};

struct SweepSpec {
  FockInput input;
  std::vector<double> delta_axis;   // delta / Gamma1
  std::vector<double> gamma2_axis;  // Gamma2 / Gamma1
  double gamma1 = 1.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double energy1 = 0.0;
  /// Search window half-margin in units of the largest linewidth.
  double window_widths = 3.0;
  int coarse_points = 241;
  double tolerance = 1e-4;
  DetectorModel detector = DetectorModel::NumberResolving;

  void validate() const {
    auto sorted_finite = [](const std::vector<double>& v) {
      if (v.empty()) return false;
      for (double x : v) {
        if (!std::isfinite(x)) return false;
      }
      return std::is_sorted(v.begin(), v.end());
    };
    if (!sorted_finite(delta_axis) || !sorted_finite(gamma2_axis)) {
      throw Error(ErrorKind::Parameter, "optimizer", "sweep axes must be non-empty, finite and sorted");
    }
    if (!(gamma1 > 0.0)) throw Error(ErrorKind::Parameter, "optimizer", "Gamma1 must be positive");
    for (double g : gamma2_axis) {
      if (!(g > 0.0)) throw Error(ErrorKind::Parameter, "optimizer", "Gamma2/Gamma1 must be positive");
    }
    if (input.total() > 2 && (beta1 != 1.0 || beta2 != 1.0)) {
      throw Error(ErrorKind::Unsupported, "optimizer", "inputs with more than two photons require beta = 1");
    }
  }
};

/// Cells ordered by delta (outer) then Gamma2 (inner).
struct SweepTable {
  SweepSpec spec;
  std::vector<SweepCell> cells;

  const SweepCell& at(std::size_t i_delta, std::size_t i_gamma2) const {
    return cells[i_delta * spec.gamma2_axis.size() + i_gamma2];
  }
};

/// Worker threads for sweeps: WGENT_THREADS if set, else the hardware count.
inline unsigned sweep_threads() {
  if (const char* env = std::getenv("WGENT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline SweepCell sweep_cell(const SweepSpec& spec, double delta_ratio, double gamma_ratio) {
  SweepCell cell;
  cell.delta_over_g1 = delta_ratio;
  cell.g2_over_g1 = gamma_ratio;
  try {
    const auto sys = SystemParams::from_detuning(spec.energy1, spec.gamma1, spec.beta1, delta_ratio * spec.gamma1,
                                                 gamma_ratio * spec.gamma1, spec.beta2);
    auto search = FrequencySearch::around(sys, spec.window_widths);
    search.coarse_points = spec.coarse_points;
    search.tolerance = spec.tolerance;
    const auto opt = optimize_frequency(spec.input, sys, search, spec.detector);
    cell.c_max = opt.c_max;
    cell.omega_opt_over_g1 = (opt.omega - spec.energy1) / spec.gamma1;
    cell.at_boundary = opt.at_boundary;
    for (const auto& o : run_monochromatic(spec.input, sys, opt.omega, spec.detector).outcomes) {
      cell.outcomes.emplace_back(o.signature, o.probability);
    }
  } catch (const Error& e) {
    cell.error = e.what();
  }
  return cell;
}

/// Evaluates every cell; `on_cell` (optional) sees cells as they finish, from
/// one thread at a time. The returned table does not depend on scheduling.
inline SweepTable sweep(const SweepSpec& spec, unsigned threads = 0,
                        const std::function<void(const SweepCell&)>& on_cell = {}) {
  spec.validate();
  const std::size_t nd = spec.delta_axis.size(), ng = spec.gamma2_axis.size();
  SweepTable table{spec, std::vector<SweepCell>(nd * ng)};
  std::atomic<std::size_t> next{0};
  std::mutex sink;
  auto work = [&] {
    for (std::size_t i = next++; i < nd * ng; i = next++) {
      SweepCell c = sweep_cell(spec, spec.delta_axis[i / ng], spec.gamma2_axis[i % ng]);
      if (on_cell) {
        std::lock_guard<std::mutex> lock(sink);
        on_cell(c);
      }
      table.cells[i] = std::move(c);
    }
  };
  const unsigned n = std::min<std::size_t>(threads ? threads : sweep_threads(), nd * ng);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return table;
}

/// n evenly spaced values from a to b inclusive.
inline std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw Error(ErrorKind::Parameter, "optimizer", "axis needs at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : (i + 1 == n ? b : a + (b - a) * i / (n - 1));
  return v;
}

}  // namespace wgent
