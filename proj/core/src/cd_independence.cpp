#include "cdlat/cd_independence.hpp"

#include <algorithm>
#include <string>

#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

// compatible[x] = {y : x, y comparable or x ^ y = 0}.
std::vector<ElementSet> compatibility_rows(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (l.comparable(x, y) || l.meet(x, y) == l.bottom()) rows[x].insert(y);
    }
  }
  return rows;
}

bool cd_with_rows(const std::vector<ElementSet>& rows, const ElementSet& xs) {
  for (Element x = xs.first(); x != ElementSet::npos; x = xs.next(x)) {
    if (!xs.is_subset_of(rows[x])) return false;
  }
  return true;
}

bool maximal_in_ideal_with_rows(const Lattice& l, const std::vector<ElementSet>& rows,
                                const ElementSet& xs, Element u) {
  ElementSet inside = xs & l.ideal(u);
  if (!cd_with_rows(rows, inside)) return false;
  ElementSet outside = l.ideal(u) - inside;
  for (Element v = outside.first(); v != ElementSet::npos; v = outside.next(v)) {
    if (inside.is_subset_of(rows[v])) return false;
  }
  return true;
}

void check_cap(const Lattice& l, std::size_t cap) {
  if (l.size() > cap) {
    throw CapExceeded("lattice has " + std::to_string(l.size()) +
                      " elements, enumeration cap is " + std::to_string(cap));
  }
}

// Bron-Kerbosch with Tomita pivoting over the compatibility graph; maximal
// cliques are exactly the maximal CD-independent sets.
class MaximalCliques {
 public:
  MaximalCliques(const std::vector<ElementSet>& rows, std::vector<ElementSet>& out)
      : rows_(rows), out_(out) {}

  void run(ElementSet r, ElementSet p, ElementSet x) {
    if (p.empty() && x.empty()) {
      out_.push_back(std::move(r));
      return;
    }
    Element pivot = ElementSet::npos;
    std::size_t best = 0;
    ElementSet px = p | x;
    px.for_each([&](Element u) {
      std::size_t c = (p & rows_[u]).count();
      if (pivot == ElementSet::npos || c > best) {
        pivot = u;
        best = c;
      }
    });
    ElementSet branch = p - rows_[pivot];
    // rows_ include the element itself, so the pivot is explicitly a branch
    // candidate when it sits in p.
    if (p.contains(pivot)) branch.insert(pivot);
    for (Element v = branch.first(); v != ElementSet::npos; v = branch.next(v)) {
      ElementSet neighbours = rows_[v];
      neighbours.erase(v);
      ElementSet r2 = r;
      r2.insert(v);
      run(std::move(r2), p & neighbours, x & neighbours);
      p.erase(v);
      x.insert(v);
    }
  }

 private:
  const std::vector<ElementSet>& rows_;
  std::vector<ElementSet>& out_;
};

}  // namespace

Verdict is_cd_independent(const Lattice& l, const ElementSet& xs) {
  const std::vector<Element> members = xs.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Element x = members[i];
      Element y = members[j];
      if (l.incomparable(x, y) && l.meet(x, y) != l.bottom()) return {false, {x, y}};
    }
  }
  return {};
}

bool is_maximal_cd_independent(const Lattice& l, const ElementSet& xs) {
  return is_maximal_cd_in_ideal(l, xs, l.top());
}

bool is_maximal_cd_in_ideal(const Lattice& l, const ElementSet& xs, Element u) {
  return maximal_in_ideal_with_rows(l, compatibility_rows(l), xs, u);
}

ElementSet extend_to_maximal(const Lattice& l, const ElementSet& xs) {
  Verdict cd = is_cd_independent(l, xs);
  if (!cd) {
    throw PreconditionViolated("set is not CD-independent: " +
                               std::to_string(cd.witness[0]) + " and " +
                               std::to_string(cd.witness[1]) + " are incomparable and meet above 0");
  }
  const auto rows = compatibility_rows(l);
  ElementSet out = xs;
  for (Element u = 0; u < l.size(); ++u) {
    if (!out.contains(u) && out.is_subset_of(rows[u])) out.insert(u);
  }
  return out;
}

std::vector<ElementSet> enumerate_maximal_cd(const Lattice& l, std::size_t cap) {
  check_cap(l, cap);
  const auto rows = compatibility_rows(l);
  std::vector<ElementSet> out;
  MaximalCliques(rows, out).run(l.empty_set(), l.all(), l.empty_set());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void for_each_cd_independent_superset(const Lattice& l, const ElementSet& base,
                                      const std::function<void(const ElementSet&)>& visit,
                                      std::size_t cap) {
  check_cap(l, cap);
  const auto rows = compatibility_rows(l);
  if (!cd_with_rows(rows, base)) {
    throw PreconditionViolated("base set is not CD-independent");
  }
  ElementSet candidates = l.all() - base;
  base.for_each([&](Element b) { candidates &= rows[b]; });

  ElementSet current = base;
  std::function<void(ElementSet)> grow = [&](ElementSet cands) {
    visit(current);
    for (Element v = cands.first(); v != ElementSet::npos; v = cands.next(v)) {
      ElementSet rest = cands & rows[v];
      // Only larger indices, so each set is produced once.
      for (Element w = rest.first(); w != ElementSet::npos && w <= v; w = rest.next(w)) {
        rest.erase(w);
      }
      current.insert(v);
      grow(std::move(rest));
      current.erase(v);
    }
  };
  grow(std::move(candidates));
}

std::size_t cd_size_bound(const Lattice& l) { return length(l) + atoms(l).count(); }

std::optional<Element> pseudocomplement(const Lattice& l, Element a) {
  Element joined = l.bottom();
  for (Element x = 0; x < l.size(); ++x) {
    if (l.meet(a, x) == l.bottom()) joined = l.join(joined, x);
  }
  if (l.meet(a, joined) == l.bottom()) return joined;
  return std::nullopt;
}

bool is_complemented_pair(const Lattice& l, Element a, Element b) {
  return l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
}

bool is_pseudocomplemented_pair(const Lattice& l, Element a, Element b) {
  return pseudocomplement(l, a) == b && pseudocomplement(l, b) == a;
}

PairClassification classify_pairs(const Lattice& l) {
  const ElementSet mir = irreducibles(l).meet_irreducible;
  std::vector<std::optional<Element>> pc(l.size());
  for (Element a = 0; a < l.size(); ++a) pc[a] = pseudocomplement(l, a);

  PairClassification out;
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = a + 1; b < l.size(); ++b) {
      bool stipulated = l.incomparable(a, b) || (mir.contains(a) && mir.contains(b));
      bool zero_one = (a == l.bottom() && b == l.top()) || (a == l.top() && b == l.bottom());
      if (!stipulated || zero_one) continue;
      if (is_complemented_pair(l, a, b)) out.comp.emplace_back(a, b);
      if (pc[a] == b && pc[b] == a) out.pcomp.emplace_back(a, b);
    }
  }
  return out;
}

Theorem1Report verify_theorem1(const Lattice& l, const Theorem1Options& options) {
  if (l.size() < 2) throw PreconditionViolated("lattice needs at least two elements");
  check_cap(l, options.cap);

  Theorem1Report report;
  report.meet_distributive = is_meet_distributive(l).holds;
  report.distributive = is_distributive(l).holds;
  report.dually_slim_lsm = is_dually_slim(l).holds && is_lower_semimodular(l).holds;
  report.bound = cd_size_bound(l);

  const auto maximal = enumerate_maximal_cd(l, options.cap);
  report.maximal_sets = maximal.size();
  report.smallest_maximal = l.size();
  for (const auto& y : maximal) {
    report.largest_maximal = std::max(report.largest_maximal, y.count());
    report.smallest_maximal = std::min(report.smallest_maximal, y.count());
    if (report.meet_distributive && y.count() > report.bound) {
      report.violations.push_back({1, y, true, false, false});
    }
  }

  if (!report.dually_slim_lsm && !report.distributive) return report;

  const auto rows = compatibility_rows(l);
  const ElementSet mir = irreducibles(l).meet_irreducible;
  const ElementSet coatom_set = coatoms(l);
  std::vector<std::optional<Element>> pc(l.size());
  for (Element a = 0; a < l.size(); ++a) pc[a] = pseudocomplement(l, a);

  ElementSet core = atoms(l);
  core.insert(l.bottom());
  core.insert(l.top());

  auto evaluate = [&](const ElementSet& x) {
    ++report.candidates;
    const bool cd = cd_with_rows(rows, x);
    bool maximal_x = cd;
    if (cd) {
      ElementSet outside = l.all() - x;
      for (Element u = outside.first(); u != ElementSet::npos; u = outside.next(u)) {
        if (x.is_subset_of(rows[u])) {
          maximal_x = false;
          break;
        }
      }
    }
    if (maximal_x) ++report.maximal_candidates;

    ElementSet below_top = x;
    below_top.erase(l.top());
    const std::vector<Element> tops = maximal_elements(l, below_top).members();
    const std::size_t k = tops.size();

    // X ∩ ↓a1 is used for the k = 1 case; it coincides with X \ {1} there.
    const bool case_one = k == 1 && coatom_set.contains(tops[0]) &&
                          maximal_in_ideal_with_rows(l, rows, x, tops[0]);
    bool comp = false, pcomp = false, both_mir = false, apart = false, ideals = false;
    if (k == 2) {
      const Element a1 = tops[0];
      const Element a2 = tops[1];
      comp = is_complemented_pair(l, a1, a2);
      pcomp = pc[a1] == a2 && pc[a2] == a1;
      both_mir = mir.contains(a1) && mir.contains(a2);
      apart = l.incomparable(a1, a2);
      ideals = maximal_in_ideal_with_rows(l, rows, x, a1) &&
               maximal_in_ideal_with_rows(l, rows, x, a2);
    }

    if (report.dually_slim_lsm) {
      const bool b = case_one || (k == 2 && comp && pcomp && both_mir && ideals);
      const bool c = case_one || (k == 2 && comp && pcomp && apart && ideals);
      if (maximal_x != b || maximal_x != c) {
        report.violations.push_back({2, x, maximal_x, b, c});
      }
    }
    if (report.distributive) {
      const bool b = case_one || (k == 2 && comp && apart && ideals);
      if (maximal_x != b) report.violations.push_back({3, x, maximal_x, b, false});
    }
  };

  const std::vector<Element> free = (l.all() - core).members();
  if (free.size() <= options.full_subset_limit) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      ElementSet x = core;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (mask >> i & 1U) x.insert(free[i]);
      }
      evaluate(x);
    }
  } else {
    for_each_cd_independent_superset(l, core, evaluate, options.cap);
  }
  return report;
}

namespace {

// Pairs {a, b} ⊆ L \ {0, 1}, a < b, that are complemented and mutually
// pseudocomplemented.
std::vector<ElementPair> comp_pcomp_pairs(const Lattice& l) {
  std::vector<std::optional<Element>> pc(l.size());
  for (Element a = 0; a < l.size(); ++a) pc[a] = pseudocomplement(l, a);
  std::vector<ElementPair> out;
  for (Element a = 0; a < l.size(); ++a) {
    if (a == l.bottom() || a == l.top()) continue;
    for (Element b = a + 1; b < l.size(); ++b) {
      if (b == l.bottom() || b == l.top()) continue;
      if (is_complemented_pair(l, a, b) && pc[a] == b && pc[b] == a) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

std::vector<ElementPair> corollary4_violations(const Lattice& l) {
  const ElementSet mir = irreducibles(l).meet_irreducible;
  std::vector<ElementPair> out;
  for (const auto& [a, b] : comp_pcomp_pairs(l)) {
    if (!mir.contains(a) || !mir.contains(b)) out.emplace_back(a, b);
  }
  return out;
}

Corollary4Report verify_corollary4(const Lattice& l) {
  if (!is_dually_slim(l)) throw PreconditionViolated("lattice is not dually slim");
  if (!is_lower_semimodular(l)) throw PreconditionViolated("lattice is not lower semimodular");
  Corollary4Report report;
  report.pairs_checked = comp_pcomp_pairs(l).size();
  report.violations = corollary4_violations(l);
  return report;
}

}  // namespace cdlat
