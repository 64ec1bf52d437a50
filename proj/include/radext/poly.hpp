// Copyright 2026 The radext Authors.
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

#ifndef RADEXT_POLY_HPP
#define RADEXT_POLY_HPP

#include "radext/poly/matrix.hpp"
#include "radext/poly/monomial.hpp"
#include "radext/poly/multipoly.hpp"
#include "radext/poly/power_subfield.hpp"
#include "radext/poly/ratfun.hpp"
#include "radext/poly/symmetric.hpp"
#include "radext/poly/tpoly.hpp"

#endif  // RADEXT_POLY_HPP
