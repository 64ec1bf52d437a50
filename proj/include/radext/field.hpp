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

#ifndef RADEXT_FIELD_HPP
#define RADEXT_FIELD_HPP

#include "radext/field/concepts.hpp"
#include "radext/field/cyclotomic_field.hpp"
#include "radext/field/field_spec.hpp"
#include "radext/field/finite_field.hpp"
#include "radext/field/integers.hpp"
#include "radext/field/rational_field.hpp"
#include "radext/field/roots.hpp"

#endif  // RADEXT_FIELD_HPP
