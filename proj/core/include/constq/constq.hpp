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

#include "constq/errors.hpp"
#include "constq/fractional_calculus.hpp"
#include "constq/green.hpp"
#include "constq/material.hpp"
#include "constq/quadrature.hpp"
#include "constq/special.hpp"
#include "constq/stable.hpp"
#include "constq/version.hpp"
#include "constq/wright.hpp"
