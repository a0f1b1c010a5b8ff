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

// |n, m> Fock input of identical monochromatic photons, lossless emitters.
//
// After the first splitter the N = n + m photons occupy |k, N-k> with
// amplitude f_{N,n;k} (as a coefficient of u^dag^k d^dag^(N-k)); every photon
// in the upper arm picks up t_1 on the up-spin of emitter 1, every photon in
// the lower arm t_2 on the up-spin of emitter 2. The second splitter sends
// u^dag^k d^dag^(N-k) to sum_p g_{N,k;p} u^dag^p d^dag^(N-p).

#include <array>
#include <cmath>
#include <vector>

#include "wgent/domain.hpp"
#include "wgent/errors.hpp"
#include "wgent/protocols/common.hpp"
#include "wgent/scattering.hpp"

namespace wgent::protocols {

inline constexpr int kDefaultPhotonCap = 12;

namespace detail {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace detail

/// f[k] = f_{N,n;k}, g[k][p] = g_{N,k;p}.
struct NPhotonCoeffs {
  int total = 0;
  int upper = 0;
  std::vector<double> f;
  std::vector<std::vector<double>> g;
};

inline NPhotonCoeffs coefficient_tables(int total, int upper, int cap = kDefaultPhotonCap) {
  if (total < 1 || upper < 0 || upper > total) {
    throw Error(ErrorKind::Parameter, "protocols", "need 0 <= n <= N and N >= 1");
  }
  if (total > cap) {
    throw Error(ErrorKind::Resource, "protocols",
                "N = " + std::to_string(total) + " exceeds the photon-number cap " + std::to_string(cap));
  }
  const int lower = total - upper;
  const double norm = std::pow(2.0, -0.5 * total);
  NPhotonCoeffs c;
  c.total = total;
  c.upper = upper;
  c.f.assign(static_cast<std::size_t>(total + 1), 0.0);
  c.g.assign(static_cast<std::size_t>(total + 1), std::vector<double>(static_cast<std::size_t>(total + 1), 0.0));
  // (u + d)^n (d - u)^m / sqrt(n! m!)
  const double input = 1.0 / std::sqrt(detail::factorial(upper) * detail::factorial(lower));
  for (int k = 0; k <= total; ++k) {
    double s = 0.0;
    for (int k1 = std::max(0, k - lower); k1 <= std::min(upper, k); ++k1) {
      s += ((k - k1) % 2 ? -1.0 : 1.0) * detail::binomial(upper, k1) * detail::binomial(lower, k - k1);
    }
    c.f[static_cast<std::size_t>(k)] = s * input * norm;
  }
  // (u - d)^k (u + d)^(N-k)
  for (int k = 0; k <= total; ++k) {
    for (int p = 0; p <= total; ++p) {
      double s = 0.0;
      for (int p1 = std::max(0, p - (total - k)); p1 <= std::min(k, p); ++p1) {
        s += ((k - p1) % 2 ? -1.0 : 1.0) * detail::binomial(k, p1) * detail::binomial(total - k, p - p1);
      }
      c.g[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = s * norm;
    }
  }
  return c;
}

/// Spin coefficients c^{ab}_p for outcome (p, N - p).
inline std::vector<TwoQubitPure> spin_coefficients(const NPhotonCoeffs& tab, cplx t1, cplx t2) {
  const int n = tab.total;
  std::vector<TwoQubitPure> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    std::array<cplx, 4> c{};
    for (int k = 0; k <= n; ++k) {
      const double fg = tab.f[static_cast<std::size_t>(k)] * tab.g[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
      if (fg == 0.0) continue;
      const cplx a = std::pow(t1, k), b = std::pow(t2, n - k);
      c[0] += fg * a * b;
      c[1] += fg * a;
      c[2] += fg * b;
      c[3] += fg;
    }
    for (auto& v : c) v *= 0.5;
    out.emplace_back(c);
  }
  return out;
}

inline ProtocolResult n_photon_monochromatic(int upper, int lower, const SystemParams& sys, double omega,
                                             int cap = kDefaultPhotonCap) {
  if (upper < 0 || lower < 0) throw Error(ErrorKind::Parameter, "protocols", "photon numbers must be non-negative");
  const int total = upper + lower;
  if (!sys.lossless()) {
    throw Error(ErrorKind::Unsupported, "protocols",
                "the N-photon protocol is only defined for lossless emitters (beta = 1)");
  }
  const auto tab = coefficient_tables(total, upper, cap);
  const auto coeffs = spin_coefficients(tab, transmission(omega, sys.first), transmission(omega, sys.second));
  std::vector<DetectionOutcome> out;
  for (int p = 0; p <= total; ++p) {
    const double weight = detail::factorial(p) * detail::factorial(total - p);
    out.push_back(outcome_from_amplitudes({p, total - p}, coeffs[static_cast<std::size_t>(p)], weight));
  }
  return finish(std::move(out), {upper, lower, monochromatic_label(omega), DetectorModel::NumberResolving},
                1e-9);
}

}  // namespace wgent::protocols
