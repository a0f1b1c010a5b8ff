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

// Data tables for each figure id. An id yields one or more CSV tables.
// Defaults: delta = 1.0 ueV, Gamma in {0.66, 1.0, 2.0} ueV, beta in {1, 0.9};
// all of them can be overridden.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wgent/domain.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"
#include "wgent/io/csv.hpp"
#include "wgent/optimizer.hpp"
#include "wgent/protocols/n_photon.hpp"
#include "wgent/protocols/single_photon.hpp"
#include "wgent/protocols/two_photon.hpp"

namespace wgent::figures {

struct FigureOptions {
  double delta = 1.0;
  std::vector<double> gammas = {0.66, 1.0, 2.0};
  std::vector<double> betas = {1.0, 0.9};
  /// Samples along the main axis; 0 picks the per-figure default.
  int points = 0;
  /// Grid side for sweep figures.
  int grid = 41;
  unsigned threads = 0;
};

struct FigureFile {
  std::string name;
  io::CsvTable table;
  nlohmann::json meta;
};

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"2b", "2c", "2d", "3a", "3b", "3c", "3d",
                                               "4a", "4b", "4c", "4d", "S1", "S2"};
  return ids;
}

inline bool known_figure(const std::string& id) {
  for (const auto& f : figure_ids()) {
    if (f == id) return true;
  }
  return false;
}

namespace detail {

inline std::vector<double> logspace(double a, double b, int n) {
  auto v = linspace(std::log10(a), std::log10(b), n);
  for (auto& x : v) x = std::pow(10.0, x);
  v.front() = a;
  v.back() = b;
  return v;
}

inline nlohmann::json base_meta(const std::string& id, const FigureOptions& o, const std::string& what) {
  return {{"figure", id},
          {"generator", "wgent"},
          {"description", what},
          {"units", "energies in ueV, hbar = 1"},
          {"defaults", {{"delta_ueV", o.delta}, {"gammas_ueV", o.gammas}, {"betas", o.betas}}}};
}

inline int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

const std::vector<ProfileKind> kBroadbandKinds = {ProfileKind::Lorentzian, ProfileKind::Gaussian,
                                                  ProfileKind::Square};

inline FigureFile grid_figure(const std::string& id, const std::string& name, FockInput in,
                              const FigureOptions& o, bool energies_first) {
  SweepSpec spec;
  spec.input = in;
  spec.delta_axis = linspace(0.0, 3.0, o.grid);
  spec.gamma2_axis = linspace(0.2, 3.0, o.grid);
  const auto table = sweep(spec, o.threads);
  io::CsvTable csv = energies_first
                         ? io::CsvTable({"delta_over_g1", "g2_over_g1", "omega_opt_minus_E1_over_g1", "c_avg_max"})
                         : io::CsvTable({"delta_over_g1", "g2_over_g1", "c_avg_max", "omega_opt"});
  for (const auto& c : table.cells) {
    if (energies_first) {
      csv.add({c.delta_over_g1, c.g2_over_g1, c.omega_opt_over_g1, c.c_max});
    } else {
      csv.add({c.delta_over_g1, c.g2_over_g1, c.c_max, c.omega_opt_over_g1});
    }
  }
  auto meta = base_meta(id, o, "maximum average concurrence over photon energy for input " + in.str());
  meta["input"] = {{"n", in.upper}, {"m", in.lower}};
  meta["beta"] = 1.0;
  meta["grid"] = {{"delta_over_g1", {0.0, 3.0}}, {"g2_over_g1", {0.2, 3.0}}, {"points", o.grid}};
  meta["omega_opt"] = "(omega_opt - E1) / Gamma1";
  return {name, std::move(csv), std::move(meta)};
}

}  // namespace detail

/// Tables for one figure id.
inline std::vector<FigureFile> make_figure(const std::string& id, const FigureOptions& o = {}) {
  using namespace protocols;
  std::vector<FigureFile> out;
  const double d = o.delta;

  if (id == "2b" || id == "3a") {
    const bool two = id == "3a";
    const auto ws = linspace(-2.0, 3.0, detail::pick(o.points, 501));
    io::CsvTable csv = two ? io::CsvTable({"omega_minus_E1_ueV", "gamma_ueV", "c_avg"})
                           : io::CsvTable({"omega_minus_E1_ueV", "gamma_ueV", "beta", "c_avg"});
    const std::vector<double> betas = two ? std::vector<double>{1.0} : o.betas;
    for (double beta : betas) {
      for (double g : o.gammas) {
        const auto sys = SystemParams::from_detuning(0.0, g, beta, d, g, beta);
        for (double w : ws) {
          const double c = two ? two_photon_monochromatic(sys, w).c_avg : single_photon_monochromatic(sys, w).c_avg;
          if (two) {
            csv.add({w, g, c});
          } else {
            csv.add({w, g, beta, c});
          }
        }
      }
    }
    out.push_back({id, std::move(csv),
                   detail::base_meta(id, o, two ? "two-photon |1,1> average concurrence vs photon energy"
                                                : "single-photon average concurrence vs photon energy")});
  } else if (id == "2c") {
    const auto gs = linspace(0.1, 3.0, detail::pick(o.points, 59));
    io::CsvTable csv({"gamma_ueV", "beta", "omega_opt_minus_E1_ueV", "c_avg_max"});
    for (double beta : o.betas) {
      for (double g : gs) {
        const auto sys = SystemParams::from_detuning(0.0, g, beta, d, g, beta);
        const auto opt = optimize_frequency(FockInput{1, 0}, sys, FrequencySearch::around(sys));
        csv.add({g, beta, opt.omega, opt.c_max});
      }
    }
    out.push_back({id, std::move(csv), detail::base_meta(id, o, "optimal single-photon energy vs linewidth")});
  } else if (id == "2d" || id == "3b") {
    const bool two = id == "3b";
    const auto sigmas = detail::logspace(0.01, 4.0, detail::pick(o.points, two ? 17 : 25));
    io::CsvTable csv({"sigma_ueV", "profile", "c_avg"});
    const auto sys = SystemParams::from_detuning(0.0, 1.0, 1.0, d, 1.0, 1.0);
    for (ProfileKind k : detail::kBroadbandKinds) {
      for (double s : sigmas) {
        const auto p = SpectralProfile::make(k, 0.5 * d, s);
        const double c = two ? two_photon_broadband(sys, JointEnvelope::identical(p)).c_avg
                             : single_photon_broadband(sys, p).c_avg;
        csv.add({s, std::string(to_string(k)), c});
      }
    }
    auto meta = detail::base_meta(id, o, two ? "two-photon average concurrence vs envelope FWHM"
                                             : "single-photon average concurrence vs envelope FWHM");
    meta["gamma_ueV"] = 1.0;
    meta["center"] = "midpoint (E1 + E2) / 2";
    out.push_back({id, std::move(csv), std::move(meta)});
  } else if (id == "3c") {
    const auto betas = linspace(0.5, 1.0, detail::pick(o.points, 51));
    io::CsvTable csv({"beta", "c_avg_two_photon", "c_avg_single_photon"});
    for (double b : betas) {
      const auto sys = SystemParams::from_detuning(0.0, 1.0, b, d, 1.0, b);
      csv.add({b, two_photon_monochromatic(sys, 0.5 * d).c_avg, single_photon_monochromatic(sys, 0.5 * d).c_avg});
    }
    auto meta = detail::base_meta(id, o, "average concurrence vs beta at the midpoint photon energy");
    meta["gamma_ueV"] = 1.0;
    out.push_back({id, std::move(csv), std::move(meta)});
  } else if (id == "3d") {
    const auto ratios = linspace(0.0, 4.0, detail::pick(o.points, 81));
    io::CsvTable csv({"delta_over_gamma", "beta", "c_max_two_photon", "omega_opt_two_photon_minus_E1_ueV",
                      "c_max_single_photon", "omega_opt_single_photon_minus_E1_ueV"});
    for (double beta : o.betas) {
      for (double r : ratios) {
        const auto sys = SystemParams::from_detuning(0.0, 1.0, beta, r, 1.0, beta);
        const auto search = FrequencySearch::around(sys);
        const auto two = optimize_frequency(FockInput{1, 1}, sys, search);
        const auto one = optimize_frequency(FockInput{1, 0}, sys, search);
        csv.add({r, beta, two.c_max, two.omega, one.c_max, one.omega});
      }
    }
    auto meta = detail::base_meta(id, o, "optimised average concurrence vs delta / Gamma");
    meta["gamma_ueV"] = 1.0;
    out.push_back({id, std::move(csv), std::move(meta)});
  } else if (id == "4a" || id == "4b" || id == "4c" || id == "4d") {
    const FockInput inputs[] = {{1, 0}, {1, 1}, {2, 1}, {2, 2}};
    out.push_back(detail::grid_figure(id, id, inputs[id[1] - 'a'], o, false));
  } else if (id == "S1") {
    for (int total = 1; total <= 6; ++total) {
      for (int m = 0; 2 * m <= total; ++m) {
        const FockInput in{total - m, m};
        out.push_back(detail::grid_figure(id, "S1_n" + std::to_string(in.upper) + "_m" + std::to_string(in.lower),
                                          in, o, false));
      }
    }
  } else if (id == "S2") {
    for (FockInput in : {FockInput{1, 0}, FockInput{1, 1}, FockInput{2, 1}, FockInput{2, 2}}) {
      out.push_back(detail::grid_figure(id, "S2_n" + std::to_string(in.upper) + "_m" + std::to_string(in.lower),
                                        in, o, true));
    }
  } else {
    throw Error(ErrorKind::Parameter, "figures", "unknown figure id '" + id + "'");
  }
  return out;
}

}  // namespace wgent::figures
