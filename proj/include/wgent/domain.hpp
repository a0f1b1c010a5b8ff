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

// Physical parameters, unit conventions and two-qubit state containers.
//
// Units: every energy-like quantity (transition energies, detunings,
// linewidths, photon energies hbar*omega) is expressed in micro-electronvolts
// with hbar = 1. Nanoseconds only appear in lifetime_from_linewidth().
//
// Basis order for the emitter pair is fixed to (up-up, up-down, down-up,
// down-down); the first label always refers to emitter 1.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgent/errors.hpp"

namespace wgent {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vector4c = Eigen::Matrix<cplx, 4, 1>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// hbar in micro-electronvolt nanoseconds.
inline constexpr double kHbarMicroeVns = 0.6582119569;

enum BasisIndex : int { kUpUp = 0, kUpDown = 1, kDownUp = 2, kDownDown = 3 };

// gamma = Gamma (1 - beta) / beta
inline double gamma_from_beta(double coupling, double beta) {
  if (!(beta > 0.0) || beta > 1.0) {
    throw Error(ErrorKind::Parameter, "domain", "beta must lie in (0, 1], got " + std::to_string(beta));
  }
  if (!(coupling > 0.0)) {
    throw Error(ErrorKind::Parameter, "domain", "Gamma must be positive, got " + std::to_string(coupling));
  }
  return coupling * (1.0 - beta) / beta;
}

inline double beta_from_gamma(double coupling, double loss) { return coupling / (coupling + loss); }

/// Radiative lifetime (ns) of a transition with linewidth hbar*Gamma (ueV).
inline double lifetime_from_linewidth(double linewidth) {
  if (!(linewidth > 0.0)) {
    throw Error(ErrorKind::Parameter, "domain", "linewidth must be positive");
  }
  return kHbarMicroeVns / linewidth;
}

/// One L-type emitter at a chiral waveguide point.
class EmitterParams {
 public:
  EmitterParams(double energy, double coupling, double beta = 1.0)
      : energy_(energy), coupling_(coupling), beta_(beta), loss_(gamma_from_beta(coupling, beta)) {
    if (!std::isfinite(energy)) {
      throw Error(ErrorKind::Parameter, "domain", "transition energy must be finite");
    }
  }

  double energy() const noexcept { return energy_; }
  /// Unidirectional emission rate into the guided mode, hbar*Gamma.
  double coupling() const noexcept { return coupling_; }
  double beta() const noexcept { return beta_; }
  /// Emission rate into non-guided modes, hbar*gamma.
  double loss() const noexcept { return loss_; }
  double total_width() const noexcept { return coupling_ + loss_; }
  bool lossless() const noexcept { return beta_ == 1.0; }

  EmitterParams shifted(double offset) const { return {energy_ + offset, coupling_, beta_}; }
  EmitterParams scaled(double factor) const { return {energy_ * factor, coupling_ * factor, beta_}; }

 private:
  double energy_;
  double coupling_;
  double beta_;
  double loss_;
};

struct SystemParams {
  EmitterParams first;
  EmitterParams second;

  /// delta = E2 - E1
  double detuning() const noexcept { return second.energy() - first.energy(); }
  double max_total_width() const noexcept { return std::max(first.total_width(), second.total_width()); }
  bool lossless() const noexcept { return first.lossless() && second.lossless(); }

  /// Builds the pair from the parametrisation used by every figure:
  /// E2 = E1 + delta.
  static SystemParams from_detuning(double e1, double gamma1, double beta1, double delta, double gamma2,
                                    double beta2) {
    return {EmitterParams{e1, gamma1, beta1}, EmitterParams{e1 + delta, gamma2, beta2}};
  }

  SystemParams shifted(double offset) const { return {first.shifted(offset), second.shifted(offset)}; }
  SystemParams swapped() const { return {second, first}; }
};

class TwoQubitPure {
 public:
  TwoQubitPure() = default;
  explicit TwoQubitPure(const std::array<cplx, 4>& amplitudes) : amp_(amplitudes) {}
  TwoQubitPure(cplx uu, cplx ud, cplx du, cplx dd) : amp_{uu, ud, du, dd} {}

  const std::array<cplx, 4>& amplitudes() const noexcept { return amp_; }
  cplx operator[](int i) const { return amp_[static_cast<std::size_t>(i)]; }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
  }

  TwoQubitPure normalized() const {
    const double n = std::sqrt(norm_squared());
    if (!(n > 0.0)) {
      throw Error(ErrorKind::Parameter, "domain", "cannot normalise a zero two-qubit vector");
    }
    TwoQubitPure out = *this;
    for (auto& a : out.amp_) a /= n;
    return out;
  }

  Vector4c vector() const { return Vector4c{amp_[0], amp_[1], amp_[2], amp_[3]}; }

  static TwoQubitPure up_up() { return {1.0, 0.0, 0.0, 0.0}; }
  static TwoQubitPure down_down() { return {0.0, 0.0, 0.0, 1.0}; }
  /// (|up,up> - |down,down>)/sqrt2
  static TwoQubitPure phi_minus() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, 0.0, 0.0, -r};
  }
  /// (|up,down> - |down,up>)/sqrt2
  static TwoQubitPure psi_minus() {
    const double r = 1.0 / std::sqrt(2.0);
    return {0.0, r, -r, 0.0};
  }

 private:
  std::array<cplx, 4> amp_{};
};

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class TwoQubitDensity {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigenTol = 1e-10;

  explicit TwoQubitDensity(const Matrix4c& m) : m_(m) { validate(); }

  /// Hermitian part of m divided by its trace.
  static TwoQubitDensity from_unnormalized(const Matrix4c& m) {
    Matrix4c h = 0.5 * (m + m.adjoint());
    const double tr = h.trace().real();
    if (!(tr > 0.0)) {
      throw Error(ErrorKind::Parameter, "domain", "density matrix with non-positive trace");
    }
    return TwoQubitDensity(h / tr);
  }

  static TwoQubitDensity from_pure(const TwoQubitPure& psi) {
    const Vector4c v = psi.normalized().vector();
    Matrix4c m = v * v.adjoint();
    return TwoQubitDensity(0.5 * (m + m.adjoint()));
  }

  static TwoQubitDensity maximally_mixed() { return TwoQubitDensity(Matrix4c::Identity() * 0.25); }

  const Matrix4c& matrix() const noexcept { return m_; }
  cplx operator()(int r, int c) const { return m_(r, c); }

  Eigen::Vector4d eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  double purity() const { return (m_ * m_).trace().real(); }

 private:
  void validate() const {
    if (!m_.allFinite()) {
      throw Error(ErrorKind::Parameter, "domain", "density matrix contains non-finite entries");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
      throw Error(ErrorKind::Parameter, "domain", "density matrix is not Hermitian");
    }
    if (std::abs(m_.trace().real() - 1.0) > kTraceTol) {
      throw Error(ErrorKind::Parameter, "domain", "density matrix trace differs from one");
    }
    if (eigenvalues().minCoeff() < -kEigenTol) {
      throw Error(ErrorKind::Parameter, "domain", "density matrix has a negative eigenvalue");
    }
  }

  Matrix4c m_;
};

struct WeightedState {
  double weight;
  TwoQubitPure state;
};

/// sum_i w_i |phi_i><phi_i| / sum_i w_i, each phi_i normalised first.
inline TwoQubitDensity density_from_pure_mixture(std::span<const WeightedState> entries) {
  Matrix4c acc = Matrix4c::Zero();
  double total = 0.0;
  for (const auto& e : entries) {
    if (e.weight < 0.0 || !std::isfinite(e.weight)) {
      throw Error(ErrorKind::Parameter, "domain", "mixture weights must be finite and non-negative");
    }
    if (e.weight == 0.0) continue;
    const Vector4c v = e.state.normalized().vector();
    acc += e.weight * (v * v.adjoint());
    total += e.weight;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorKind::Parameter, "domain", "degenerate mixture: all weights are zero");
  }
  return TwoQubitDensity::from_unnormalized(acc);
}

inline TwoQubitDensity density_from_pure_mixture(std::initializer_list<WeightedState> entries) {
  return density_from_pure_mixture(std::span<const WeightedState>(entries.begin(), entries.size()));
}

/// Detector signature: p photons at D1, q photons at D2.
struct Signature {
  int p = 0;
  int q = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct DetectionOutcome {
  Signature signature;
  double probability = 0.0;
  /// Absent when the outcome never occurs (probability below kNegligibleProbability).
  std::optional<TwoQubitDensity> state;
  double concurrence = 0.0;
};

inline constexpr double kNegligibleProbability = 1e-14;

enum class DetectorModel { NumberResolving, NonNumberResolving };

inline const char* to_string(DetectorModel d) {
  return d == DetectorModel::NumberResolving ? "number-resolving" : "non-number-resolving";
}

struct ProtocolMetadata {
  int photons_upper = 0;
  int photons_lower = 0;
  std::string envelope;  // "monochromatic@<omega>" or profile description
  DetectorModel detector = DetectorModel::NumberResolving;
};

struct ProtocolResult {
  std::vector<DetectionOutcome> outcomes;
  double c_avg = 0.0;
  ProtocolMetadata metadata;

  double probability_sum() const {
    double s = 0.0;
    for (const auto& o : outcomes) s += o.probability;
    return s;
  }

  const DetectionOutcome* find(int p, int q) const {
    for (const auto& o : outcomes) {
      if (o.signature.p == p && o.signature.q == q) return &o;
    }
    return nullptr;
  }

  double probability(int p, int q) const {
    const auto* o = find(p, q);
    return o ? o->probability : 0.0;
  }
};

}  // namespace wgent
