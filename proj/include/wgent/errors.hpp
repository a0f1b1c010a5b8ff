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

#include <complex>
#include <stdexcept>
#include <string>

namespace wgent {

// Every failure raised by the library carries the module that detected it
// and a coarse category. The CLI maps categories onto exit codes.
enum class ErrorKind {
  Parameter,      // value outside its physical domain (beta > 1, Gamma <= 0, ...)
  Unsupported,    // valid values, but a combination the model does not cover
  Misuse,         // API contract violation (e.g. pointwise monochromatic evaluation)
  Consistency,    // internal consistency check failed (probabilities, norms)
  Numerical,      // quadrature / eigen-solver failure
  Resource,       // request exceeds configured caps
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Misuse: return "misuse";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Numerical: return "numerical";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

// Raised when panel doubling fails to meet the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& module, const std::string& what,
                  std::complex<double> previous, std::complex<double> last)
      : Error(ErrorKind::Numerical, module, what), previous_(previous), last_(last) {}

  std::complex<double> previous_estimate() const noexcept { return previous_; }
  std::complex<double> last_estimate() const noexcept { return last_; }

 private:
  std::complex<double> previous_;
  std::complex<double> last_;
};

}  // namespace wgent
