#include "cdlat/properties.hpp"

#include <string>

#include "cdlat/errors.hpp"

namespace cdlat {

Verdict is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = y + 1; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

Verdict is_meet_distributive(const Lattice& l) {
  for (Element u = 0; u < l.size(); ++u) {
    if (u == l.bottom()) continue;
    if (!is_distributive(interval_sublattice(l, lowstar(l, u), u))) {
      return {false, {u}};
    }
  }
  return {};
}

Verdict is_lower_semimodular(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (l.covered_by(a, l.join(a, b)) && !l.covered_by(l.meet(a, b), b)) {
        return {false, {a, b}};
      }
    }
  }
  return {};
}

Verdict is_dually_slim(const Lattice& l) {
  const std::vector<Element> mir = irreducibles(l).meet_irreducible.members();
  for (std::size_t i = 0; i < mir.size(); ++i) {
    for (std::size_t j = i + 1; j < mir.size(); ++j) {
      if (l.comparable(mir[i], mir[j])) continue;
      for (std::size_t k = j + 1; k < mir.size(); ++k) {
        if (l.incomparable(mir[i], mir[k]) && l.incomparable(mir[j], mir[k])) {
          return {false, {mir[i], mir[j], mir[k]}};
        }
      }
    }
  }
  return {};
}

bool avann_check(const Lattice& l) {
  Verdict md = is_meet_distributive(l);
  if (!md) {
    throw PreconditionViolated("lattice is not meet-distributive (interval below " +
                               std::to_string(md.witness.front()) + ")");
  }
  return irreducibles(l).join_irreducible.count() == length(l);
}

}  // namespace cdlat
