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

// Summation kernel shared by the Wright, M and F series. Unlike the public
// wright_series it accepts μ = 0, which the F series needs.

#include "constq/wright.hpp"

namespace constq::wright::detail {

EvalResult sum_series(double lambda, double mu, double z, const SeriesOptions& opts);

}  // namespace constq::wright::detail
