#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace classeq {

/// Dense 0-based index of a group element. After canonicalization, index 0 is
/// always the identity.
using Element = int;

inline constexpr Element kIdentity = 0;

/// Bitset over the element indices [0, n) of one group. The subset machinery
/// (class unions, closures, complement search) runs millions of membership
/// tests, so this stays a flat word array.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), bits_(static_cast<std::size_t>(universe + 63) / 64, 0) {}

  static ElementSet from(int universe, const std::vector<Element>& xs) {
    ElementSet s(universe);
    for (Element x : xs) s.insert(x);
    return s;
  }

  int universe() const { return n_; }

  bool contains(Element x) const {
    return (bits_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1u;
  }
  void insert(Element x) {
    bits_[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(Element x) {
    bits_[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  int size() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a |= b;
    return a;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a &= b;
    return a;
  }

  bool operator==(const ElementSet&) const = default;

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~o.bits_[i]) return false;
    }
    return true;
  }

  /// Members in ascending index order.
  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        int b = std::countr_zero(word);
        out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace classeq
