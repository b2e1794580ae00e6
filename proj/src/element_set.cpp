#include "deltaring/element_set.hpp"

#include <stdexcept>

namespace deltaring {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : ElementSet(universe) {
  for (std::size_t x : members) {
    if (x >= universe) throw std::out_of_range("ElementSet: member out of range");
    insert(x);
  }
}

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members)
    : ElementSet(universe) {
  for (Element x : members) {
    if (x >= universe) throw std::out_of_range("ElementSet: member out of range");
    insert(x);
  }
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(x);
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("ElementSet: universes differ");
  }
}

}  // namespace deltaring
