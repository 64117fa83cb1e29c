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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace chipfire {

using VertexId = std::int32_t;

/// Fixed-universe bit set over vertex ids [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const VertexId> members);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(VertexId v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (static_cast<std::size_t>(v) & 63)) & 1u;
  }
  void insert(VertexId v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(v) & 63);
  }
  void erase(VertexId v) noexcept {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) & 63));
  }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_; }

  /// |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet complement() const;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& subtract(const VertexSet& other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

  /// Members in ascending order.
  std::vector<VertexId> to_vector() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace chipfire
