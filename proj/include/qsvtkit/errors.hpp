// Copyright 2026 The qsvtkit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qsvtkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (shapes, ranges, non-unitary input).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A matrix exceeds the operator norm bound of its contract; carries the
/// measured norm.
class NormError : public ValidationError {
 public:
  NormError(const std::string& what, double norm)
      : ValidationError(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

/// Argument outside the domain where a function is defined or implemented.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result too large for a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not converge; carries the last residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A polynomial pair fails the QSP achievability conditions.
class NotAchievableError : public Error {
 public:
  NotAchievableError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A user-supplied function returned a non-finite value at a sample node.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A configured constant is too small for a runtime inequality check.
class ConstantTooSmallError : public Error {
 public:
  using Error::Error;
};

/// A measured quantity exceeds its tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace qsvtkit
