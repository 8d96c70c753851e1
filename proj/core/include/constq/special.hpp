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

// Gamma-function helpers shared by the series evaluators. Poles of Γ in a
// denominator are treated as exact zeros of 1/Γ.

namespace constq::special {

/// True when x is 0, -1, -2, ... exactly.
bool is_nonpositive_integer(double x) noexcept;

/// sin(πx) with exact zeros at the integers.
double sin_pi(double x) noexcept;

/// 1/Γ(x); exactly 0 at the poles of Γ.
double rgamma(double x) noexcept;

/// log|1/Γ(x)| together with the sign of 1/Γ(x). sign == 0 at the poles,
/// where log_abs is -inf.
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_rgamma(double x) noexcept;

/// Γ(a)/Γ(b) evaluated through log-gamma. Returns 0 when b is a pole of Γ;
/// a must not be a pole.
double gamma_ratio(double a, double b);

}  // namespace constq::special
