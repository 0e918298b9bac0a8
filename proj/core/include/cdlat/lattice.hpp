#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cdlat/element_set.hpp"

namespace cdlat {

using CoverPair = std::pair<Element, Element>;

// A finite lattice on the elements 0..size()-1.
//
// The order relation is kept as one down-set and one up-set bit row per
// element, together with dense meet and join tables. Values are immutable
// once built, so a Lattice can be shared freely between threads.
class Lattice {
 public:
  // Builds the lattice whose order is the reflexive-transitive closure of
  // `cover_pairs` (each (x, y) declares x below y). Redundant pairs are
  // accepted; covers() always reports the transitive reduction.
  //
  // Throws CyclicCovers if the pairs contain a cycle and NotALattice naming
  // the first pair (in ascending index order) without a meet or a join.
  static Lattice from_covers(std::size_t n, std::span<const CoverPair> cover_pairs);

  // Builds the lattice of a partial order given as a predicate leq(x, y).
  // The predicate must be reflexive, antisymmetric and transitive.
  static Lattice from_order(std::size_t n,
                            const std::function<bool(Element, Element)>& leq);

  std::size_t size() const noexcept { return n_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return down_[y].contains(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(Element x, Element y) const { return !comparable(x, y); }
  // x is covered by y.
  bool covered_by(Element x, Element y) const { return upper_[x].contains(y); }

  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }

  // Principal ideal {x : x <= u} and principal filter {x : x >= u}.
  const ElementSet& ideal(Element u) const { return down_[u]; }
  const ElementSet& filter(Element u) const { return up_[u]; }

  const ElementSet& lower_covers(Element u) const { return lower_[u]; }
  const ElementSet& upper_covers(Element u) const { return upper_[u]; }

  // Transitive reduction of the order, sorted ascending.
  std::vector<CoverPair> covers() const;

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet all() const { return ElementSet::full(n_); }

  // Meet and join of a nonempty set.
  Element meet_of(const ElementSet& xs) const;
  Element join_of(const ElementSet& xs) const;

 private:
  Lattice() = default;
  static Lattice from_rows(std::size_t n, std::vector<ElementSet> down);

  std::size_t n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> lower_;
  std::vector<ElementSet> upper_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

// The interval [lo, hi] as a lattice in its own right. `mapping`, when
// non-null, receives the original index of each element of the result.
Lattice interval_sublattice(const Lattice& lattice, Element lo, Element hi,
                            std::vector<Element>* mapping = nullptr);

// Meet of all lower covers of u. Throws BottomHasNoLowerCovers for u = 0.
Element lowstar(const Lattice& lattice, Element u);

struct Irreducibles {
  ElementSet join_irreducible;  // exactly one lower cover
  ElementSet meet_irreducible;  // exactly one upper cover
};

Irreducibles irreducibles(const Lattice& lattice);

ElementSet atoms(const Lattice& lattice);
ElementSet coatoms(const Lattice& lattice);

// Size of a longest chain minus one.
std::size_t length(const Lattice& lattice);

// Visits every maximal chain bottom-to-top. The visitor returns false to stop.
void for_each_maximal_chain(const Lattice& lattice,
                            const std::function<bool(const std::vector<Element>&)>& visit);

struct Structure {
  ElementSet atoms;
  ElementSet coatoms;
  std::size_t length = 0;
};

Structure structure(const Lattice& lattice);

// Maximal elements of `xs` under the lattice order.
ElementSet maximal_elements(const Lattice& lattice, const ElementSet& xs);

}  // namespace cdlat
