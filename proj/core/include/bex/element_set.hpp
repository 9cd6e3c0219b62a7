#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bex {

// A subset of a ground set with at most 64 elements, stored as a bitmask.
// Elements are integers 0..63; iteration yields them in ascending order.
class ElementSet {
 public:
  static constexpr int kMaxElements = 64;

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet single(int e) { return from_bits(std::uint64_t{1} << e); }
  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.bits_ |= std::uint64_t{1} << e;
    return s;
  }
  static ElementSet of(const std::vector<int>& elems) {
    ElementSet s;
    for (int e : elems) s.bits_ |= std::uint64_t{1} << e;
    return s;
  }
  // The set {0, 1, ..., n-1}.
  static constexpr ElementSet first_n(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & std::uint64_t{1}; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr ElementSet with(int e) const { return from_bits(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(int e) const { return from_bits(bits_ & ~(std::uint64_t{1} << e)); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return from_bits(a.bits_ ^ b.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

  // Smallest element, or -1 when empty.
  constexpr int smallest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  class const_iterator {
   public:
    constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const const_iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int e : *this) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bex
