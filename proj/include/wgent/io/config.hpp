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

// Run configuration: an INI file with one section per concern, overridable
// key by key (command-line flags write into the same tree).
//
//   [system]   e1, gamma1, beta1, delta | delta_over_gamma, gamma2 | gamma2_over_gamma1, beta2
//   [input]    n, m
//   [envelope] kind, center, sigma, omega | omega_at (resonance, midpoint, second)
//   [detector] model (nr, nnr)
//   [search]   lo, hi, points, tolerance
//   [sweep]    delta_min, delta_max, delta_points, gamma2_min, gamma2_max, gamma2_points
//   [output]   path
//   [run]      seed

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "wgent/domain.hpp"
#include "wgent/envelopes.hpp"
#include "wgent/errors.hpp"
#include "wgent/optimizer.hpp"

namespace wgent::io {

using Tree = boost::property_tree::ptree;

inline const std::map<std::string, std::set<std::string>>& config_schema() {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"system", {"e1", "gamma1", "beta1", "delta", "delta_over_gamma", "gamma2", "gamma2_over_gamma1", "beta2"}},
      {"input", {"n", "m"}},
      {"envelope", {"kind", "center", "sigma", "omega", "omega_at"}},
      {"detector", {"model"}},
      {"search", {"lo", "hi", "points", "tolerance"}},
      {"sweep", {"delta_min", "delta_max", "delta_points", "gamma2_min", "gamma2_max", "gamma2_points"}},
      {"output", {"path"}},
      {"run", {"seed"}},
  };
  return schema;
}

inline Tree load_config_file(const std::filesystem::path& path) {
  Tree t;
  try {
    boost::property_tree::read_ini(path.string(), t);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw Error(ErrorKind::Parameter, "config", e.what());
  }
  return t;
}

inline DetectorModel parse_detector(const std::string& s) {
  if (s == "nr" || s == "number-resolving") return DetectorModel::NumberResolving;
  if (s == "nnr" || s == "non-number-resolving" || s == "click") return DetectorModel::NonNumberResolving;
  throw Error(ErrorKind::Parameter, "config", "unknown detector model '" + s + "'");
}

struct RunConfig {
  double e1 = 0.0;
  double gamma1 = 1.0;
  double beta1 = 1.0;
  double delta = 0.0;
  double gamma2 = 1.0;
  double beta2 = 1.0;
  FockInput input{1, 0};
  ProfileKind envelope = ProfileKind::Monochromatic;
  std::optional<double> center;
  std::optional<double> sigma;
  std::optional<double> omega;
  std::string omega_at = "midpoint";
  DetectorModel detector = DetectorModel::NumberResolving;
  std::optional<double> search_lo;
  std::optional<double> search_hi;
  int search_points = 241;
  double search_tolerance = 1e-4;
  double delta_min = 0.0, delta_max = 3.0;
  int delta_points = 41;
  double gamma2_min = 0.2, gamma2_max = 3.0;
  int gamma2_points = 41;
  std::optional<std::string> output;
  std::uint64_t seed = 0;  // reserved; every path is deterministic

  SystemParams system() const { return SystemParams::from_detuning(e1, gamma1, beta1, delta, gamma2, beta2); }

  /// Photon energy for monochromatic runs and the default envelope centre.
  double photon_energy() const {
    if (omega) return *omega;
    if (omega_at == "resonance") return e1;
    if (omega_at == "midpoint") return e1 + 0.5 * delta;
    if (omega_at == "second") return e1 + delta;
    throw Error(ErrorKind::Parameter, "config", "omega_at must be resonance, midpoint or second");
  }

  SpectralProfile profile() const {
    const double c = center.value_or(photon_energy());
    if (envelope == ProfileKind::Monochromatic) return SpectralProfile::monochromatic(c);
    if (!sigma) throw Error(ErrorKind::Parameter, "config", "a broadband envelope needs sigma");
    return SpectralProfile::make(envelope, c, *sigma);
  }

  FrequencySearch search() const {
    auto s = FrequencySearch::around(system());
    if (search_lo) s.lo = *search_lo;
    if (search_hi) s.hi = *search_hi;
    s.coarse_points = search_points;
    s.tolerance = search_tolerance;
    return s;
  }

  SweepSpec sweep_spec() const {
    SweepSpec s;
    s.input = input;
    s.delta_axis = linspace(delta_min, delta_max, delta_points);
    s.gamma2_axis = linspace(gamma2_min, gamma2_max, gamma2_points);
    s.gamma1 = gamma1;
    s.beta1 = beta1;
    s.beta2 = beta2;
    s.energy1 = e1;
    s.coarse_points = search_points;
    s.tolerance = search_tolerance;
    s.detector = detector;
    return s;
  }

  /// Rejects combinations no protocol covers.
  void validate() const {
    (void)system();
    if (input.upper < 0 || input.lower < 0 || input.total() < 1) {
      throw Error(ErrorKind::Parameter, "config", "input needs n, m >= 0 and at least one photon");
    }
    if (input.total() > 2 && (beta1 != 1.0 || beta2 != 1.0)) {
      throw Error(ErrorKind::Unsupported, "config",
                  "inputs with more than two photons are only modelled for lossless emitters (beta = 1)");
    }
    if (envelope != ProfileKind::Monochromatic) {
      if (input.total() > 2 || (input.total() == 2 && !(input.upper == 1 && input.lower == 1))) {
        throw Error(ErrorKind::Unsupported, "config", "broadband envelopes are modelled for |1,0>, |0,1> and |1,1> only");
      }
      (void)profile();
    }
    if (search_points < 3) throw Error(ErrorKind::Parameter, "config", "search points must be at least 3");
    if (delta_points < 1 || gamma2_points < 1) throw Error(ErrorKind::Parameter, "config", "sweep axes need points");
  }
};

namespace detail {

template <class T>
T get_value(const Tree& t, const std::string& key) {
  const auto raw = t.get<std::string>(key);
  try {
    std::size_t pos = 0;
    T v{};
    if constexpr (std::is_same_v<T, double>) {
      v = std::stod(raw, &pos);
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite");
    } else if constexpr (std::is_same_v<T, int>) {
      v = std::stoi(raw, &pos);
    } else {
      v = static_cast<T>(std::stoull(raw, &pos));
    }
    if (pos != raw.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parameter, "config", "bad value '" + raw + "' for " + key);
  }
}

}  // namespace detail

inline RunConfig config_from_tree(const Tree& t) {
  for (const auto& [section, body] : t) {
    const auto it = config_schema().find(section);
    if (it == config_schema().end()) throw Error(ErrorKind::Parameter, "config", "unknown section [" + section + "]");
    for (const auto& kv : body) {
      if (!it->second.count(kv.first)) {
        throw Error(ErrorKind::Parameter, "config", "unknown key '" + kv.first + "' in [" + section + "]");
      }
    }
  }
  auto has = [&t](const std::string& k) { return static_cast<bool>(t.get_optional<std::string>(k)); };
  auto num = [&t](const std::string& k) { return detail::get_value<double>(t, k); };
  auto integer = [&t](const std::string& k) { return detail::get_value<int>(t, k); };

  RunConfig c;
  if (has("system.e1")) c.e1 = num("system.e1");
  if (has("system.gamma1")) c.gamma1 = num("system.gamma1");
  if (has("system.beta1")) c.beta1 = num("system.beta1");
  c.gamma2 = c.gamma1;
  c.beta2 = c.beta1;
  if (has("system.delta") && has("system.delta_over_gamma")) {
    throw Error(ErrorKind::Parameter, "config", "give either delta or delta_over_gamma, not both");
  }
  if (has("system.delta")) c.delta = num("system.delta");
  if (has("system.delta_over_gamma")) c.delta = num("system.delta_over_gamma") * c.gamma1;
  if (has("system.gamma2") && has("system.gamma2_over_gamma1")) {
    throw Error(ErrorKind::Parameter, "config", "give either gamma2 or gamma2_over_gamma1, not both");
  }
  if (has("system.gamma2")) c.gamma2 = num("system.gamma2");
  if (has("system.gamma2_over_gamma1")) c.gamma2 = num("system.gamma2_over_gamma1") * c.gamma1;
  if (has("system.beta2")) c.beta2 = num("system.beta2");

  if (has("input.n")) c.input.upper = integer("input.n");
  if (has("input.m")) c.input.lower = integer("input.m");

  if (has("envelope.kind")) c.envelope = parse_profile_kind(t.get<std::string>("envelope.kind"));
  if (has("envelope.center")) c.center = num("envelope.center");
  if (has("envelope.sigma")) c.sigma = num("envelope.sigma");
  if (has("envelope.omega")) c.omega = num("envelope.omega");
  if (has("envelope.omega_at")) c.omega_at = t.get<std::string>("envelope.omega_at");

  if (has("detector.model")) c.detector = parse_detector(t.get<std::string>("detector.model"));

  if (has("search.lo")) c.search_lo = num("search.lo");
  if (has("search.hi")) c.search_hi = num("search.hi");
  if (has("search.points")) c.search_points = integer("search.points");
  if (has("search.tolerance")) c.search_tolerance = num("search.tolerance");

  if (has("sweep.delta_min")) c.delta_min = num("sweep.delta_min");
  if (has("sweep.delta_max")) c.delta_max = num("sweep.delta_max");
  if (has("sweep.delta_points")) c.delta_points = integer("sweep.delta_points");
  if (has("sweep.gamma2_min")) c.gamma2_min = num("sweep.gamma2_min");
  if (has("sweep.gamma2_max")) c.gamma2_max = num("sweep.gamma2_max");
  if (has("sweep.gamma2_points")) c.gamma2_points = integer("sweep.gamma2_points");

  if (has("output.path")) c.output = t.get<std::string>("output.path");
  if (has("run.seed")) c.seed = detail::get_value<std::uint64_t>(t, "run.seed");
  (void)c.photon_energy();
  return c;
}

}  // namespace wgent::io
