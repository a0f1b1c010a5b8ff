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

// Wootters concurrence of two-qubit states.
//
// For a mixed state the lambdas (square roots of the eigenvalues of
// rho (Y rho* Y), Y = sigma_y (x) sigma_y) are obtained as the singular values of
// tau = W^T Y W, where rho = W W^dagger is built from the eigen-decomposition
// of rho. This is the same spectrum without the square root of a non-Hermitian
// product, so rank-deficient (e.g. pure) states keep full precision.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>

#include "wgent/domain.hpp"
#include "wgent/errors.hpp"

namespace wgent {

/// sigma_y (x) sigma_y in the (uu, ud, du, dd) basis.
inline Eigen::Matrix4d spin_flip() {
  Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

inline double concurrence_pure(const TwoQubitPure& psi) {
  if (std::abs(psi.norm_squared() - 1.0) > 1e-6) {
    throw Error(ErrorKind::Parameter, "entanglement", "concurrence_pure expects a normalised state");
  }
  return std::min(1.0, 2.0 * std::abs(psi[kUpUp] * psi[kDownDown] - psi[kUpDown] * psi[kDownUp]));
}

/// Wootters lambdas in decreasing order.
inline std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::Numerical, "entanglement", "eigen-decomposition of rho failed");
  }
  const double cutoff = 1e-14 * std::max(1.0, rho.matrix().trace().real());
  Eigen::Matrix<cplx, 4, Eigen::Dynamic> w(4, 0);
  for (int i = 0; i < 4; ++i) {
    const double p = es.eigenvalues()(i);
    if (p <= cutoff) continue;
    w.conservativeResize(Eigen::NoChange, w.cols() + 1);
    w.col(w.cols() - 1) = std::sqrt(p) * es.eigenvectors().col(i);
  }
  std::array<double, 4> lam{0.0, 0.0, 0.0, 0.0};
  if (w.cols() == 0) return lam;
  const Eigen::MatrixXcd tau = w.transpose() * spin_flip().cast<cplx>() * w;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) lam[static_cast<std::size_t>(i)] = sv(i);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

inline double concurrence_mixed(const TwoQubitDensity& rho) {
  const auto l = wootters_lambdas(rho);
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

/// sum Pr(p,q) C(rho_(p,q)) over the outcomes of a protocol run.
inline double average_concurrence(const ProtocolResult& result, double tolerance = 1e-6) {
  const double total = result.probability_sum();
  if (std::abs(total - 1.0) > tolerance) {
    throw Error(ErrorKind::Consistency, "entanglement",
                "outcome probabilities sum to " + std::to_string(total) + ", not 1");
  }
  double c = 0.0;
  for (const auto& o : result.outcomes) c += o.probability * o.concurrence;
  return c;
}

}  // namespace wgent
