// Copyright 2026 The qlab Authors
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

#ifndef QLAB_ELEM_SET_HPP_
#define QLAB_ELEM_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace qlab {

// Elements of a finite carrier are addressed by index.
using Elem = std::size_t;

// Carriers are capped so that element sets fit in one machine word.
inline constexpr std::size_t kMaxElements = 64;

// A set of element indices below kMaxElements.
class ElemSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = const Elem*;
    using reference = Elem;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Elem operator*() const {
      return static_cast<Elem>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElemSet() = default;

  static constexpr ElemSet from_bits(std::uint64_t bits) {
    ElemSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElemSet single(Elem e) { return from_bits(bit(e)); }
  // {0, ..., n-1}
  static constexpr ElemSet range(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem e) const { return (bits_ & bit(e)) != 0; }
  constexpr void insert(Elem e) { bits_ |= bit(e); }
  constexpr void erase(Elem e) { bits_ &= ~bit(e); }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; the set must be nonempty.
  constexpr Elem front() const {
    return static_cast<Elem>(std::countr_zero(bits_));
  }
  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElemSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr ElemSet operator|(ElemSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElemSet operator-(ElemSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElemSet&) const = default;
  constexpr auto operator<=>(const ElemSet&) const = default;

 private:
  static constexpr std::uint64_t bit(Elem e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

}  // namespace qlab

#endif  // QLAB_ELEM_SET_HPP_
