#pragma once

#include <vector>

#include "cdlat/lattice.hpp"

namespace cdlat {

// Outcome of a lattice-class decision. On failure `witness` holds the
// elements that refute the property; its arity depends on the property.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return holds; }
};

// x ^ (y v z) = (x ^ y) v (x ^ z) for every triple; witness (x, y, z).
Verdict is_distributive(const Lattice& lattice);

// Every interval [lowstar(u), u], u != 0, is distributive; witness (u).
Verdict is_meet_distributive(const Lattice& lattice);

// a covered by a v b implies a ^ b covered by b; witness (a, b).
Verdict is_lower_semimodular(const Lattice& lattice);

// No three-element antichain of meet-irreducibles; witness the triple.
Verdict is_dually_slim(const Lattice& lattice);

// |Jir L| == length L. Throws PreconditionViolated unless L is
// meet-distributive.
bool avann_check(const Lattice& lattice);

}  // namespace cdlat
