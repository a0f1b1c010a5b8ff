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

// Command-line front end: run, optimize, sweep and figure subcommands.
// Flags are written into the same key tree an INI file fills, so a flag
// always overrides the file value for its key.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/errors.hpp"
#include "wgent/figures.hpp"
#include "wgent/io/config.hpp"
#include "wgent/io/csv.hpp"
#include "wgent/optimizer.hpp"
#include "wgent/protocols/single_photon.hpp"
#include "wgent/protocols/two_photon.hpp"

namespace wgent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

inline int exit_code(ErrorKind k) {
  return k == ErrorKind::Numerical || k == ErrorKind::Consistency ? kExitNumerical : kExitConfig;
}

namespace detail {

// Flag values keyed by config path. Composite flags (--beta, --profile) land
// in `base` and are applied before the specific keys in `specific`.
struct Overrides {
  std::string config_file;
  std::map<std::string, std::string> base;
  std::map<std::string, std::string> specific;
};

inline void key_flag(CLI::App* app, Overrides& o, const std::string& flag, const std::string& key,
                     const std::string& help) {
  app->add_option_function<std::string>(flag, [&o, key](const std::string& v) { o.specific[key] = v; }, help);
}

inline void add_system_flags(CLI::App* app, Overrides& o) {
  app->add_option("--config,-c", o.config_file, "INI configuration file")->check(CLI::ExistingFile);
  key_flag(app, o, "--e1", "system.e1", "transition energy of emitter 1 (ueV)");
  key_flag(app, o, "--gamma1,--gamma", "system.gamma1", "guided decay rate of emitter 1 (ueV)");
  key_flag(app, o, "--beta1", "system.beta1", "beta factor of emitter 1");
  key_flag(app, o, "--delta", "system.delta", "detuning E2 - E1 (ueV)");
  key_flag(app, o, "--delta-over-gamma", "system.delta_over_gamma", "detuning in units of Gamma1");
  key_flag(app, o, "--gamma2", "system.gamma2", "guided decay rate of emitter 2 (ueV)");
  key_flag(app, o, "--gamma2-over-gamma1", "system.gamma2_over_gamma1", "Gamma2 / Gamma1");
  key_flag(app, o, "--beta2", "system.beta2", "beta factor of emitter 2");
  app->add_option_function<std::string>(
      "--beta",
      [&o](const std::string& v) {
        o.base["system.beta1"] = v;
        o.base["system.beta2"] = v;
      },
      "beta factor of both emitters");
  key_flag(app, o, "--n", "input.n", "photons entering the upper arm");
  key_flag(app, o, "--m", "input.m", "photons entering the lower arm");
  key_flag(app, o, "--detector", "detector.model", "detector model: nr or nnr");
  key_flag(app, o, "--seed", "run.seed", "reserved; results are deterministic");
}

inline void add_envelope_flags(CLI::App* app, Overrides& o) {
  key_flag(app, o, "--omega", "envelope.omega", "photon energy (ueV)");
  key_flag(app, o, "--omega-at", "envelope.omega_at", "photon energy preset: resonance, midpoint or second");
  key_flag(app, o, "--envelope", "envelope.kind", "monochromatic, lorentzian, gaussian or square");
  key_flag(app, o, "--center", "envelope.center", "envelope centre (ueV)");
  key_flag(app, o, "--sigma", "envelope.sigma", "envelope FWHM (ueV)");
  app->add_option_function<std::string>(
      "--profile",
      [&o](const std::string& v) {
        const auto p = parse_profile(v);
        o.base["envelope.kind"] = to_string(p.kind());
        o.base["envelope.center"] = io::format_number(p.center());
        if (!p.is_monochromatic()) o.base["envelope.sigma"] = io::format_number(p.sigma());
      },
      "envelope as kind:center[:sigma]");
}

inline void add_search_flags(CLI::App* app, Overrides& o) {
  key_flag(app, o, "--lo", "search.lo", "lower edge of the photon-energy window (ueV)");
  key_flag(app, o, "--hi", "search.hi", "upper edge of the photon-energy window (ueV)");
  key_flag(app, o, "--points", "search.points", "coarse scan points");
  key_flag(app, o, "--tolerance", "search.tolerance", "golden-section tolerance (ueV)");
}

inline void add_sweep_flags(CLI::App* app, Overrides& o) {
  key_flag(app, o, "--delta-min", "sweep.delta_min", "first delta / Gamma1");
  key_flag(app, o, "--delta-max", "sweep.delta_max", "last delta / Gamma1");
  key_flag(app, o, "--delta-points", "sweep.delta_points", "delta samples");
  key_flag(app, o, "--gamma2-min", "sweep.gamma2_min", "first Gamma2 / Gamma1");
  key_flag(app, o, "--gamma2-max", "sweep.gamma2_max", "last Gamma2 / Gamma1");
  key_flag(app, o, "--gamma2-points", "sweep.gamma2_points", "Gamma2 samples");
}

inline io::RunConfig resolve(const Overrides& o) {
  io::Tree tree = o.config_file.empty() ? io::Tree{} : io::load_config_file(o.config_file);
  for (const auto& [k, v] : o.base) tree.put(k, v);
  for (const auto& [k, v] : o.specific) tree.put(k, v);
  auto cfg = io::config_from_tree(tree);
  cfg.validate();
  return cfg;
}

inline nlohmann::json config_json(const io::RunConfig& c) {
  nlohmann::json j = {
      {"system",
       {{"e1_ueV", c.e1},
        {"gamma1_ueV", c.gamma1},
        {"beta1", c.beta1},
        {"delta_ueV", c.delta},
        {"gamma2_ueV", c.gamma2},
        {"beta2", c.beta2}}},
      {"input", {{"n", c.input.upper}, {"m", c.input.lower}}},
      {"detector", to_string(c.detector)},
      {"seed", c.seed},
      {"generator", "wgent"},
      {"units", "energies in ueV, hbar = 1"},
  };
  return j;
}

inline ProtocolResult run_config(const io::RunConfig& cfg) {
  const auto sys = cfg.system();
  const auto profile = cfg.profile();
  if (profile.is_monochromatic()) return run_monochromatic(cfg.input, sys, profile.center(), cfg.detector);
  if (cfg.input.total() == 1) {
    auto r = protocols::single_photon_broadband(sys, profile);
    return cfg.input.upper == 1 ? r : wgent::detail::swap_detectors(std::move(r));
  }
  return protocols::two_photon_broadband(sys, JointEnvelope::identical(profile), cfg.detector);
}

inline void print_result(std::ostream& out, const io::RunConfig& cfg, const ProtocolResult& r) {
  out << "input " << cfg.input.str() << "  envelope " << r.metadata.envelope << "  detector "
      << to_string(r.metadata.detector) << '\n';
  out << std::left << std::setw(12) << "signature" << std::setw(20) << "probability" << "concurrence\n";
  for (const auto& o : r.outcomes) {
    out << std::setw(12) << o.signature.str() << std::setw(20) << io::format_number(o.probability)
        << io::format_number(o.concurrence) << '\n';
  }
  out << "C_avg = " << io::format_number(r.c_avg) << '\n';
}

inline int cmd_run(const Overrides& o, std::ostream& out) {
  const auto cfg = resolve(o);
  const auto r = run_config(cfg);
  print_result(out, cfg, r);
  if (cfg.output) {
    io::CsvTable t({"p", "q", "probability", "concurrence"});
    for (const auto& oc : r.outcomes) {
      t.add({static_cast<long long>(oc.signature.p), static_cast<long long>(oc.signature.q), oc.probability,
             oc.concurrence});
    }
    auto meta = config_json(cfg);
    meta["command"] = "run";
    meta["envelope"] = r.metadata.envelope;
    meta["c_avg"] = r.c_avg;
    io::write_csv(*cfg.output, t, meta);
  }
  return kExitOk;
}

inline int cmd_optimize(const Overrides& o, std::ostream& out, std::ostream& err) {
  const auto cfg = resolve(o);
  if (cfg.envelope != ProfileKind::Monochromatic) {
    throw Error(ErrorKind::Unsupported, "optimizer", "frequency optimisation covers monochromatic inputs only");
  }
  const auto search = cfg.search();
  const auto best = optimize_frequency(cfg.input, cfg.system(), search, cfg.detector);
  out << "omega_opt = " << io::format_number(best.omega) << " ueV  (omega_opt - E1 = "
      << io::format_number(best.omega - cfg.e1) << " ueV)\n";
  out << "C_avg_max = " << io::format_number(best.c_max) << '\n';
  if (best.at_boundary) {
    err << "warning: optimum lies on the search window edge [" << io::format_number(search.lo) << ", "
        << io::format_number(search.hi) << "] ueV; widen the window\n";
  }
  if (cfg.output) {
    io::CsvTable t({"omega_opt_ueV", "omega_opt_minus_E1_ueV", "c_avg_max", "at_boundary"});
    t.add({best.omega, best.omega - cfg.e1, best.c_max, static_cast<long long>(best.at_boundary)});
    auto meta = config_json(cfg);
    meta["command"] = "optimize";
    meta["search"] = {{"lo_ueV", search.lo},
                      {"hi_ueV", search.hi},
                      {"coarse_points", search.coarse_points},
                      {"tolerance_ueV", search.tolerance}};
    io::write_csv(*cfg.output, t, meta);
  }
  return kExitOk;
}

inline int cmd_sweep(const Overrides& o, unsigned threads, std::ostream& out, std::ostream& err) {
  const auto cfg = resolve(o);
  if (cfg.envelope != ProfileKind::Monochromatic) {
    throw Error(ErrorKind::Unsupported, "optimizer", "sweeps cover monochromatic inputs only");
  }
  const auto spec = cfg.sweep_spec();
  const auto table = sweep(spec, threads);
  io::CsvTable t({"delta_over_g1", "g2_over_g1", "c_avg_max", "omega_opt", "at_boundary", "error"});
  std::size_t failed = 0, edge = 0;
  for (const auto& c : table.cells) {
    t.add({c.delta_over_g1, c.g2_over_g1, c.c_max, c.omega_opt_over_g1, static_cast<long long>(c.at_boundary),
           c.error.value_or("")});
    failed += c.error.has_value();
    edge += c.at_boundary;
  }
  if (edge) err << "warning: " << edge << " cell(s) have their optimum on the search window edge\n";
  if (failed) err << "warning: " << failed << " cell(s) failed; see the error column\n";
  if (cfg.output) {
    auto meta = config_json(cfg);
    meta["command"] = "sweep";
    meta["axes"] = {{"delta_over_g1", spec.delta_axis}, {"g2_over_g1", spec.gamma2_axis}};
    meta["omega_opt"] = "(omega_opt - E1) / Gamma1";
    meta["order"] = "delta outer, Gamma2 inner";
    io::write_csv(*cfg.output, t, meta);
  } else {
    t.write(out);
  }
  return kExitOk;
}

struct FigureArgs {
  std::string id;
  std::string directory = "figures";
  figures::FigureOptions options;
};

inline int cmd_figure(const FigureArgs& a, std::ostream& out) {
  if (!figures::known_figure(a.id)) {
    throw Error(ErrorKind::Parameter, "cli", "unknown figure id '" + a.id + "'");
  }
  for (auto& f : figures::make_figure(a.id, a.options)) {
    const auto path = std::filesystem::path(a.directory) / (f.name + ".csv");
    io::write_csv(path, f.table, f.meta);
    out << path.string() << " (" << f.table.rows() << " rows)\n";
  }
  return kExitOk;
}

}  // namespace detail

/// Parses argv and dispatches; never throws.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heralded emitter entanglement in a waveguide interferometer", "wgent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wgent 1.0.0");

  detail::Overrides run_o, opt_o, sweep_o;
  unsigned threads = 0;
  detail::FigureArgs fig;

  auto* run = app.add_subcommand("run", "detection outcomes, heralded concurrences and C_avg");
  detail::add_system_flags(run, run_o);
  detail::add_envelope_flags(run, run_o);
  detail::key_flag(run, run_o, "--output,-o", "output.path", "write the outcome table as CSV");

  auto* opt = app.add_subcommand("optimize", "photon energy maximising C_avg");
  detail::add_system_flags(opt, opt_o);
  detail::add_search_flags(opt, opt_o);
  detail::key_flag(opt, opt_o, "--output,-o", "output.path", "write the optimum as CSV");

  auto* swp = app.add_subcommand("sweep", "optimised C_avg over a (delta, Gamma2) grid");
  detail::add_system_flags(swp, sweep_o);
  detail::add_search_flags(swp, sweep_o);
  detail::add_sweep_flags(swp, sweep_o);
  detail::key_flag(swp, sweep_o, "--output,-o", "output.path", "CSV path (stdout when omitted)");
  swp->add_option("--threads", threads, "worker threads (default: WGENT_THREADS or all cores)");

  auto* figc = app.add_subcommand("figure", "data tables for one figure");
  figc->add_option("id", fig.id, "figure id: " + [] {
    std::string s;
    for (const auto& i : figures::figure_ids()) s += (s.empty() ? "" : ", ") + i;
    return s;
  }())->required();
  figc->add_option("--output-dir,--output,-o", fig.directory, "directory receiving the CSV files");
  figc->add_option("--delta", fig.options.delta, "detuning for the line-plot figures (ueV)");
  figc->add_option("--gammas", fig.options.gammas, "linewidth series (ueV)")->delimiter(',');
  figc->add_option("--betas", fig.options.betas, "beta series")->delimiter(',');
  figc->add_option("--points", fig.options.points, "samples along the main axis (0: figure default)");
  figc->add_option("--grid", fig.options.grid, "grid side for sweep figures");
  figc->add_option("--threads", fig.options.threads, "worker threads for sweep figures");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitConfig;
    }
    if (*run) return detail::cmd_run(run_o, out);
    if (*opt) return detail::cmd_optimize(opt_o, out, err);
    if (*swp) return detail::cmd_sweep(sweep_o, threads, out, err);
    return detail::cmd_figure(fig, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "] " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error [parameter] cli: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace wgent::cli
