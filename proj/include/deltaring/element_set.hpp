#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace deltaring {

/// Ring elements are dense indices 0..n-1.
using Element = std::uint16_t;

/// Hard ceiling imposed by the index type.
inline constexpr std::size_t kMaxRepresentableOrder = 65535;

/// Characteristic vector of a subset of a ring's elements.
///
/// Only the universe size is stored; callers pass the ring alongside when a
/// semantic property (ideal, subring) matters, and those properties are
/// always re-checked by the consumer.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);
  ElementSet(std::size_t universe, std::span<const Element> members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(std::size_t x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(std::size_t x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Members in ascending order.
  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Calls fn(x) for every member x in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace deltaring
