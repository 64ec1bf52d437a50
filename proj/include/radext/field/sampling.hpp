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

#ifndef RADEXT_FIELD_SAMPLING_HPP
#define RADEXT_FIELD_SAMPLING_HPP

#include <cstdint>

namespace radext {

/// Uniform integer in [0, n) from a 64-bit engine. Rejection sampling keeps the
/// draw exact and independent of the standard library's distributions, which
/// are not portable across implementations.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace radext

#endif  // RADEXT_FIELD_SAMPLING_HPP
