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

#include "chipfire/limits.hpp"

#include <numeric>

namespace chipfire {

CapExceeded::CapExceeded(std::string cap_name, std::uint64_t cap_value, std::uint64_t requested)
    : std::runtime_error(cap_name + " cap of " + std::to_string(cap_value) + " exceeded (needs " +
                         std::to_string(requested) + ")"),
      cap_name_(std::move(cap_name)),
      cap_value_(cap_value),
      requested_(requested) {}

std::uint64_t composition_count(std::uint64_t parts, std::uint64_t total) noexcept {
  if (parts == 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1), built up so every prefix stays integral.
  const std::uint64_t k = parts - 1;
  // result * (total + i) is divisible by i, so dividing out gcd(result, i)
  // first leaves an exact quotient on the other factor.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t common = std::gcd(result, i);
    const std::uint64_t factor = (total + i) / (i / common);
    if (total + i < total) return kSaturated;
    result = saturating_mul(result / common, factor);
    if (result == kSaturated) return kSaturated;
  }
  return result;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}

}  // namespace chipfire
