#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cdlat {

// Lattice elements are dense indices 0..n-1.
using Element = std::size_t;

// A subset of the elements of one lattice, stored as a bit set over the
// lattice's universe. All binary operations require equal universes.
class ElementSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr Element npos = Bits::npos;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : bits_(universe) {
    for (Element e : members) bits_.set(e);
  }
  ElementSet(std::size_t universe, const std::vector<Element>& members)
      : bits_(universe) {
    for (Element e : members) bits_.set(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Element e) const { return bits_.test(e); }
  void insert(Element e) { bits_.set(e); }
  void erase(Element e) { bits_.reset(e); }

  Element first() const { return bits_.find_first(); }
  Element next(Element after) const { return bits_.find_next(after); }

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for (Element e = first(); e != npos; e = next(e)) out.push_back(e);
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (Element e = first(); e != npos; e = next(e)) fn(e);
  }

  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  const Bits& bits() const noexcept { return bits_; }

 private:
  Bits bits_;
};

// Canonical order: lexicographic comparison of the ascending member lists.
bool canonical_less(const ElementSet& a, const ElementSet& b);

}  // namespace cdlat
