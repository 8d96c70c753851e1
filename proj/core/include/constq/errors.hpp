// Copyright 2026 The constq-waves Authors
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

#include <stdexcept>
#include <string>

namespace constq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration did not meet its stopping rule.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An asymptotic evaluator was asked for a point outside its validity region.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A maximization or root search could not bracket its target.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Sampled data lives on an unusable or mismatched grid.
class GridError : public Error {
 public:
  using Error::Error;
};

/// The requested operator order is not supported by the sampled scheme.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

}  // namespace constq
