#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <vector>

namespace schur {

// Dense subset of the element index space [0, universe).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::span<const std::uint32_t> members) : bits_(universe) {
    for (auto x : members) bits_.set(x);
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::uint32_t x) const { return x < bits_.size() && bits_.test(x); }
  void insert(std::uint32_t x) { bits_.set(x); }
  void erase(std::uint32_t x) { bits_.reset(x); }

  // Smallest member; universe() when empty.
  std::uint32_t first() const { return static_cast<std::uint32_t>(bits_.find_first()); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      fn(static_cast<std::uint32_t>(i));
    }
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for_each([&](std::uint32_t x) { out.push_back(x); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace schur
