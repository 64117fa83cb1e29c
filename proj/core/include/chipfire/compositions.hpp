// Copyright 2026 The chipfire Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chipfire {

/// Calls `visit(values)` for every vector of `values.size()` non-negative
/// integers summing to `total`, in colexicographic order: the last coordinate
/// is most significant, so (total, 0, ..., 0) comes first. `values` is used
/// as scratch and holds the current composition during each call. Stops as
/// soon as `visit` returns false; returns false in that case.
template <class Visit>
bool for_each_composition(std::span<std::int64_t> values, std::int64_t total, Visit&& visit) {
  const std::size_t parts = values.size();
  if (parts == 0) return total == 0 ? static_cast<bool>(visit(values)) : true;
  if (parts == 1) {
    values[0] = total;
    return visit(values);
  }
  // Odometer over coordinates 1..parts-1; coordinate 0 takes the remainder.
  for (std::size_t i = 0; i < parts; ++i) values[i] = 0;
  std::int64_t used = 0;
  while (true) {
    values[0] = total - used;
    if (!visit(values)) return false;
    std::size_t i = 1;
    while (i < parts) {
      if (used < total) {
        ++values[i];
        ++used;
        break;
      }
      used -= values[i];
      values[i] = 0;
      ++i;
    }
    if (i == parts) return true;
  }
}

/// Strict colexicographic comparison (last coordinate most significant).
inline bool colex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace chipfire
