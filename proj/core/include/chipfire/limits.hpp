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
#include <limits>
#include <stdexcept>
#include <string>

namespace chipfire {

/// Knobs shared by every exponential search in the library.
struct SearchLimits {
  /// Maximum number of compositions enumerated per degree level.
  std::uint64_t max_compositions = 5'000'000;
  /// Largest graph accepted by maximum-independent-set enumeration.
  std::uint32_t max_mis_vertices = 256;
  /// Worker threads for partitioned enumerations; 0 means 1.
  unsigned threads = 8;
};

/// Raised when a search would exceed a configured cap. Never a silent truncation.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::uint64_t cap_value, std::uint64_t requested);

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::uint64_t cap_value() const noexcept { return cap_value_; }
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::uint64_t cap_value_;
  std::uint64_t requested_;
};

/// Number of length-`parts` non-negative integer vectors summing to `total`,
/// saturating at UINT64_MAX.
std::uint64_t composition_count(std::uint64_t parts, std::uint64_t total) noexcept;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace chipfire
