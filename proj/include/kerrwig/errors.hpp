// Copyright 2026 The kerrwig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KERRWIG_ERRORS_HPP
#define KERRWIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kerrwig {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input data (non-Hermitian matrix, bad dimensions, ...). Exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (branch cut
/// violation, |st| >= 1, ...). Exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unscaled evaluation would leave the representable range; the caller
/// should switch to the factorial-normalized variant.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature failed to converge within its budget. Carries the
/// best available estimate of the unresolved remainder. Exit code 2.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double partial, double estimate)
      : Error(msg), partial_(partial), estimate_(estimate) {}
  double partial() const { return partial_; }
  double estimate() const { return estimate_; }

 private:
  double partial_;
  double estimate_;
};

/// Requested truncation cutoff is too small for the requested tolerance.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& msg, double tail)
      : Error(msg), tail_(tail) {}
  double tail() const { return tail_; }

 private:
  double tail_;
};

/// File read/write failure. Exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kerrwig

#endif  // KERRWIG_ERRORS_HPP
