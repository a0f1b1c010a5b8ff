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

// Single-photon spectral profiles and separable two-photon envelopes.
//
// sigma is always the FWHM of the intensity |xi(omega)|^2 (the full width for
// the square profile). Phase conventions:
//   Gaussian, Square: real and non-negative everywhere.
//   Lorentzian:       xi(w) = i sqrt(sigma / 2pi) / (w - w0 + i sigma/2),
//                     i.e. the spontaneous-emission line shape of a source
//                     with width sigma; it is real and positive at w0.
// |xi|^2 does not see the phase, but two-photon scattering does.

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/errors.hpp"
#include "wgent/quadrature.hpp"

namespace wgent {

enum class ProfileKind { Monochromatic, Lorentzian, Gaussian, Square };

inline const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::Monochromatic: return "monochromatic";
    case ProfileKind::Lorentzian: return "lorentzian";
    case ProfileKind::Gaussian: return "gaussian";
    case ProfileKind::Square: return "square";
  }
  return "unknown";
}

inline ProfileKind parse_profile_kind(const std::string& s) {
  if (s == "monochromatic" || s == "mono") return ProfileKind::Monochromatic;
  if (s == "lorentzian" || s == "lorentz") return ProfileKind::Lorentzian;
  if (s == "gaussian" || s == "gauss") return ProfileKind::Gaussian;
  if (s == "square" || s == "box") return ProfileKind::Square;
  throw Error(ErrorKind::Parameter, "envelopes", "unknown profile kind '" + s + "'");
}

class SpectralProfile {
 public:
  static SpectralProfile monochromatic(double center) { return SpectralProfile(ProfileKind::Monochromatic, center, 0.0); }
  static SpectralProfile lorentzian(double center, double fwhm) { return {ProfileKind::Lorentzian, center, fwhm}; }
  static SpectralProfile gaussian(double center, double fwhm) { return {ProfileKind::Gaussian, center, fwhm}; }
  static SpectralProfile square(double center, double width) { return {ProfileKind::Square, center, width}; }

  static SpectralProfile make(ProfileKind kind, double center, double sigma) {
    return kind == ProfileKind::Monochromatic ? monochromatic(center) : SpectralProfile(kind, center, sigma);
  }

  ProfileKind kind() const noexcept { return kind_; }
  double center() const noexcept { return center_; }
  double sigma() const noexcept { return sigma_; }
  bool is_monochromatic() const noexcept { return kind_ == ProfileKind::Monochromatic; }

  SpectralProfile shifted(double offset) const { return make(kind_, center_ + offset, sigma_); }
  SpectralProfile scaled(double factor) const { return make(kind_, center_ * factor, sigma_ * factor); }

  /// Amplitude xi(omega). Monochromatic profiles have no pointwise value.
  cplx operator()(double omega) const {
    const double x = omega - center_;
    switch (kind_) {
      case ProfileKind::Lorentzian:
        return kI * lorentz_norm_ / cplx(x, 0.5 * sigma_);
      case ProfileKind::Gaussian:
        return gauss_peak_ * std::exp(-x * x * gauss_inv4var_);
      case ProfileKind::Square:
        return std::abs(x) <= 0.5 * sigma_ ? cplx(square_height_) : cplx(0.0);
      case ProfileKind::Monochromatic:
        break;
    }
    throw Error(ErrorKind::Misuse, "envelopes",
                "a monochromatic profile cannot be evaluated pointwise; use the closed-form protocols");
  }

  /// Interval outside which |xi| is negligible (exactly zero for Square).
  std::pair<double, double> support() const {
    const double h = support_half_width();
    return {center_ - h, center_ + h};
  }

  double support_half_width() const {
    switch (kind_) {
      case ProfileKind::Lorentzian: return kLorentzTailWindow * sigma_;
      case ProfileKind::Gaussian: return 8.0 * sigma_;
      case ProfileKind::Square: return 0.5 * sigma_;
      case ProfileKind::Monochromatic: return 0.0;
    }
    return 0.0;
  }

  /// Discontinuities of xi.
  std::vector<double> breakpoints() const {
    if (kind_ == ProfileKind::Square) return {center_ - 0.5 * sigma_, center_ + 0.5 * sigma_};
    return {};
  }

  quad::Feature feature() const { return {center_, kind_ == ProfileKind::Square ? 0.5 * sigma_ : 0.5 * sigma_}; }

  std::string describe() const {
    std::ostringstream os;
    os.precision(12);
    os << to_string(kind_) << ':' << center_;
    if (!is_monochromatic()) os << ':' << sigma_;
    return os.str();
  }

  /// Half-width, in units of sigma, kept for Lorentzian tails
  /// (intensity outside is about 1/(pi * 1e9)).
  static constexpr double kLorentzTailWindow = 1e9;

 private:
  SpectralProfile(ProfileKind kind, double center, double sigma) : kind_(kind), center_(center), sigma_(sigma) {
    if (!std::isfinite(center)) throw Error(ErrorKind::Parameter, "envelopes", "profile center must be finite");
    if (kind != ProfileKind::Monochromatic && !(sigma > 0.0 && std::isfinite(sigma))) {
      throw Error(ErrorKind::Parameter, "envelopes", "profile width sigma must be positive");
    }
    if (kind == ProfileKind::Lorentzian) lorentz_norm_ = std::sqrt(sigma / (2.0 * kPi));
    if (kind == ProfileKind::Gaussian) {
      // |xi|^2 is a normal density with standard deviation s, FWHM = 2 sqrt(2 ln2) s.
      const double s = sigma / (2.0 * std::sqrt(2.0 * std::log(2.0)));
      gauss_peak_ = std::pow(2.0 * kPi * s * s, -0.25);
      gauss_inv4var_ = 1.0 / (4.0 * s * s);
    }
    if (kind == ProfileKind::Square) square_height_ = 1.0 / std::sqrt(sigma);
  }

  ProfileKind kind_;
  double center_;
  double sigma_;
  double lorentz_norm_ = 0.0;
  double gauss_peak_ = 0.0;
  double gauss_inv4var_ = 0.0;
  double square_height_ = 0.0;
};

/// Parses "kind:center[:sigma]", e.g. "gaussian:0.5:1.0" or "monochromatic:0.5".
inline SpectralProfile parse_profile(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2) {
    throw Error(ErrorKind::Parameter, "envelopes", "profile must read kind:center[:sigma], got '" + text + "'");
  }
  const ProfileKind kind = parse_profile_kind(parts[0]);
  try {
    const double center = std::stod(parts[1]);
    if (kind == ProfileKind::Monochromatic) return SpectralProfile::monochromatic(center);
    if (parts.size() != 3) throw Error(ErrorKind::Parameter, "envelopes", "profile '" + text + "' needs a sigma");
    return SpectralProfile::make(kind, center, std::stod(parts[2]));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parameter, "envelopes", "malformed number in profile '" + text + "'");
  }
}

/// Separable two-photon envelope xi(w, w') = a(w) b(w'); photon a enters the
/// upper arm, photon b the lower arm.
struct JointEnvelope {
  SpectralProfile a;
  SpectralProfile b;

  static JointEnvelope identical(const SpectralProfile& p) { return {p, p}; }

  cplx operator()(double w, double wp) const { return a(w) * b(wp); }

  bool exchange_symmetric() const {
    return a.kind() == b.kind() && a.center() == b.center() && a.sigma() == b.sigma();
  }

  /// xi(w, w') - xi(w', w)
  cplx antisymmetric_part(double w, double wp) const { return a(w) * b(wp) - a(wp) * b(w); }
};

/// Standard quadrature window for a profile alone.
inline quad::QuadratureSpec standard_spec(const SpectralProfile& p, double tolerance = 1e-6) {
  quad::QuadratureSpec s;
  const auto [lo, hi] = p.support();
  s.center = 0.5 * (lo + hi);
  s.half_width = 0.5 * (hi - lo);
  s.panels = 8;
  s.tolerance = tolerance;
  s.features = {p.feature()};
  s.breakpoints = p.breakpoints();
  return s;
}

/// Numerically re-integrated intensity of a profile over its standard window.
inline double intensity_norm(const SpectralProfile& p, double tolerance = 1e-10) {
  auto spec = standard_spec(p, tolerance);
  return quad::integrate_1d([&p](double w) { return cplx(std::norm(p(w))); }, spec).value.real();
}

}  // namespace wgent
