#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cdlat/lattice.hpp"
#include "cdlat/properties.hpp"

namespace cdlat {

// Default bound on |L| for exhaustive enumeration of CD-independent sets.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

// Unordered pair of elements, stored with first < second.
using ElementPair = std::pair<Element, Element>;

// Any two incomparable members meet in 0. Witness: one offending pair.
Verdict is_cd_independent(const Lattice& lattice, const ElementSet& xs);

// xs is CD-independent and no single element can be added to it.
bool is_maximal_cd_independent(const Lattice& lattice, const ElementSet& xs);

// xs ∩ ↓u is a maximal CD-independent subset of the ideal ↓u.
bool is_maximal_cd_in_ideal(const Lattice& lattice, const ElementSet& xs, Element u);

// Greedy completion over ascending element index. Since CD-independence is
// inherited by subsets, one pass yields a maximal set.
// Throws PreconditionViolated if xs is not CD-independent.
ElementSet extend_to_maximal(const Lattice& lattice, const ElementSet& xs);

// Every maximal CD-independent subset exactly once, in canonical order.
// Throws CapExceeded if |L| > cap.
std::vector<ElementSet> enumerate_maximal_cd(const Lattice& lattice,
                                             std::size_t cap = kDefaultEnumerationCap);

// Visits every CD-independent superset of `base` (itself CD-independent)
// exactly once. Throws CapExceeded if |L| > cap.
void for_each_cd_independent_superset(const Lattice& lattice, const ElementSet& base,
                                      const std::function<void(const ElementSet&)>& visit,
                                      std::size_t cap = kDefaultEnumerationCap);

// length L + |At L|.
std::size_t cd_size_bound(const Lattice& lattice);

// The largest c with a ^ c = 0, if {c : a ^ c = 0} has a maximum.
std::optional<Element> pseudocomplement(const Lattice& lattice, Element a);

bool is_complemented_pair(const Lattice& lattice, Element a, Element b);
bool is_pseudocomplemented_pair(const Lattice& lattice, Element a, Element b);

// Complemented and pseudocomplemented pairs, restricted to pairs with
// a || b or {a, b} ⊆ Mir L. The pair {0, 1} is never listed.
struct PairClassification {
  std::vector<ElementPair> comp;
  std::vector<ElementPair> pcomp;
};

PairClassification classify_pairs(const Lattice& lattice);

struct Theorem1Options {
  std::size_t cap = kDefaultEnumerationCap;
  // When L minus {0, 1} ∪ atoms has at most this many elements, every subset
  // X ⊇ {0, 1} ∪ atoms is a candidate. Otherwise only CD-independent X are
  // enumerated; for the rest all three characterizations are false.
  std::size_t full_subset_limit = 12;
};

// One candidate X on which the characterizations disagree.
struct Theorem1Violation {
  int part = 0;  // 1, 2 or 3
  ElementSet x;
  bool maximal = false;      // condition (a)
  bool recursive = false;    // condition (b)
  bool incomparable = false; // condition (c), part 2 only
};

struct Theorem1Report {
  bool meet_distributive = false;
  bool dually_slim_lsm = false;
  bool distributive = false;
  std::size_t bound = 0;
  std::size_t maximal_sets = 0;
  std::size_t largest_maximal = 0;
  std::size_t smallest_maximal = 0;
  std::size_t candidates = 0;  // candidates examined for parts 2/3
  std::size_t maximal_candidates = 0;
  std::vector<Theorem1Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Checks the bound |Y| <= length + |atoms| for meet-distributive L and the
// recursive characterizations of maximal CD-independent sets for dually slim
// lower semimodular L and for distributive L, each only when its hypotheses
// hold. Throws CapExceeded / PreconditionViolated (|L| < 2).
Theorem1Report verify_theorem1(const Lattice& lattice, const Theorem1Options& options = {});

// Pairs {a1, a2} ⊆ L \ {0, 1} in Comp ∩ Pcomp (raw definitions, no
// stipulation filter) with a member outside Mir L. Does not check hypotheses.
std::vector<ElementPair> corollary4_violations(const Lattice& lattice);

struct Corollary4Report {
  std::size_t pairs_checked = 0;  // pairs in Comp ∩ Pcomp inside L \ {0, 1}
  std::vector<ElementPair> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Throws PreconditionViolated unless L is dually slim and lower semimodular.
Corollary4Report verify_corollary4(const Lattice& lattice);

}  // namespace cdlat
