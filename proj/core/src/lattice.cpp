#include "cdlat/lattice.hpp"

#include <algorithm>
#include <string>

#include "cdlat/errors.hpp"

namespace cdlat {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  Element x = a.first();
  Element y = b.first();
  while (x != ElementSet::npos && y != ElementSet::npos) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == ElementSet::npos && y != ElementSet::npos;
}

namespace {

// Among the members of `bounds`, the one whose row equals `bounds`, if any.
Element extremal_member(const ElementSet& bounds, const std::vector<ElementSet>& rows) {
  Element best = ElementSet::npos;
  std::size_t best_count = 0;
  bounds.for_each([&](Element e) {
    std::size_t c = rows[e].count();
    if (c > best_count) {
      best = e;
      best_count = c;
    }
  });
  if (best != ElementSet::npos && rows[best] == bounds) return best;
  return ElementSet::npos;
}

}  // namespace

Lattice Lattice::from_covers(std::size_t n, std::span<const CoverPair> cover_pairs) {
  if (n == 0) throw PreconditionViolated("a lattice needs at least one element");
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [x, y] : cover_pairs) {
    if (x >= n || y >= n) {
      throw PreconditionViolated("cover pair (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") out of range for " +
                                 std::to_string(n) + " elements");
    }
    if (x == y) {
      throw CyclicCovers("element " + std::to_string(x) + " covers itself");
    }
    succ[x].push_back(y);
    ++indegree[y];
  }

  // Kahn's algorithm; the smallest ready index goes first so that any error
  // report is deterministic.
  std::vector<Element> order;
  order.reserve(n);
  std::vector<Element> ready;
  for (Element v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    Element v = *it;
    ready.erase(it);
    order.push_back(v);
    for (Element w : succ[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) throw CyclicCovers("cover relation contains a cycle");

  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element v = 0; v < n; ++v) down[v].insert(v);
  for (Element v : order) {
    for (Element w : succ[v]) down[w] |= down[v];
  }
  return from_rows(n, std::move(down));
}

Lattice Lattice::from_order(std::size_t n,
                            const std::function<bool(Element, Element)>& leq) {
  if (n == 0) throw PreconditionViolated("a lattice needs at least one element");
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      if (leq(x, y)) down[y].insert(x);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!down[x].contains(x)) {
      throw PreconditionViolated("order is not reflexive at " + std::to_string(x));
    }
    bool transitive = true;
    down[x].for_each([&](Element y) {
      if (y != x && down[y].contains(x)) {
        throw PreconditionViolated("order is not antisymmetric at (" +
                                   std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      if (!down[y].is_subset_of(down[x])) transitive = false;
    });
    if (!transitive) {
      throw PreconditionViolated("order is not transitive below " + std::to_string(x));
    }
  }
  return from_rows(n, std::move(down));
}

Lattice Lattice::from_rows(std::size_t n, std::vector<ElementSet> down) {
  Lattice l;
  l.n_ = n;
  l.down_ = std::move(down);
  l.up_.assign(n, ElementSet(n));
  for (Element y = 0; y < n; ++y) {
    l.down_[y].for_each([&](Element x) { l.up_[x].insert(y); });
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      Element m = extremal_member(l.down_[x] & l.down_[y], l.down_);
      if (m == ElementSet::npos) {
        throw NotALattice(x, y, "elements " + std::to_string(x) + " and " +
                                    std::to_string(y) + " have no meet");
      }
      Element j = extremal_member(l.up_[x] & l.up_[y], l.up_);
      if (j == ElementSet::npos) {
        throw NotALattice(x, y, "elements " + std::to_string(x) + " and " +
                                    std::to_string(y) + " have no join");
      }
      l.meet_[x * n + y] = l.meet_[y * n + x] = m;
      l.join_[x * n + y] = l.join_[y * n + x] = j;
    }
  }

  l.bottom_ = 0;
  l.top_ = 0;
  for (Element x = 0; x < n; ++x) {
    if (l.up_[x].count() == n) l.bottom_ = x;
    if (l.down_[x].count() == n) l.top_ = x;
  }

  l.lower_.assign(n, ElementSet(n));
  l.upper_.assign(n, ElementSet(n));
  for (Element y = 0; y < n; ++y) {
    ElementSet strictly_below = l.down_[y];
    strictly_below.erase(y);
    strictly_below.for_each([&](Element x) {
      // x is a lower cover iff nothing strictly between x and y.
      if ((l.up_[x] & strictly_below).count() == 1) {
        l.lower_[y].insert(x);
        l.upper_[x].insert(y);
      }
    });
  }
  return l;
}

std::vector<CoverPair> Lattice::covers() const {
  std::vector<CoverPair> out;
  for (Element x = 0; x < n_; ++x) {
    upper_[x].for_each([&](Element y) { out.emplace_back(x, y); });
  }
  return out;
}

Element Lattice::meet_of(const ElementSet& xs) const {
  Element acc = top_;
  xs.for_each([&](Element e) { acc = meet(acc, e); });
  return acc;
}

Element Lattice::join_of(const ElementSet& xs) const {
  Element acc = bottom_;
  xs.for_each([&](Element e) { acc = join(acc, e); });
  return acc;
}

Lattice interval_sublattice(const Lattice& lattice, Element lo, Element hi,
                            std::vector<Element>* mapping) {
  if (!lattice.leq(lo, hi)) {
    throw PreconditionViolated("interval [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] is empty");
  }
  std::vector<Element> members = (lattice.filter(lo) & lattice.ideal(hi)).members();
  Lattice sub = Lattice::from_order(members.size(), [&](Element a, Element b) {
    return lattice.leq(members[a], members[b]);
  });
  if (mapping != nullptr) *mapping = std::move(members);
  return sub;
}

Element lowstar(const Lattice& lattice, Element u) {
  if (u == lattice.bottom()) {
    throw BottomHasNoLowerCovers("the bottom element has no lower covers");
  }
  return lattice.meet_of(lattice.lower_covers(u));
}

Irreducibles irreducibles(const Lattice& lattice) {
  Irreducibles out{lattice.empty_set(), lattice.empty_set()};
  for (Element x = 0; x < lattice.size(); ++x) {
    if (lattice.lower_covers(x).count() == 1) out.join_irreducible.insert(x);
    if (lattice.upper_covers(x).count() == 1) out.meet_irreducible.insert(x);
  }
  return out;
}

ElementSet atoms(const Lattice& lattice) {
  return lattice.upper_covers(lattice.bottom());
}

ElementSet coatoms(const Lattice& lattice) {
  return lattice.lower_covers(lattice.top());
}

std::size_t length(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  // Elements sorted by ideal size form a linear extension.
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    return lattice.ideal(a).count() < lattice.ideal(b).count();
  });
  std::vector<std::size_t> height(n, 0);
  for (Element v : order) {
    lattice.lower_covers(v).for_each(
        [&](Element w) { height[v] = std::max(height[v], height[w] + 1); });
  }
  return height[lattice.top()];
}

void for_each_maximal_chain(const Lattice& lattice,
                            const std::function<bool(const std::vector<Element>&)>& visit) {
  std::vector<Element> chain{lattice.bottom()};
  bool stop = false;
  std::function<void()> extend = [&]() {
    if (stop) return;
    Element last = chain.back();
    if (last == lattice.top()) {
      if (!visit(chain)) stop = true;
      return;
    }
    lattice.upper_covers(last).for_each([&](Element next) {
      if (stop) return;
      chain.push_back(next);
      extend();
      chain.pop_back();
    });
  };
  extend();
}

Structure structure(const Lattice& lattice) {
  return Structure{atoms(lattice), coatoms(lattice), length(lattice)};
}

ElementSet maximal_elements(const Lattice& lattice, const ElementSet& xs) {
  ElementSet out(lattice.size());
  xs.for_each([&](Element x) {
    if ((lattice.filter(x) & xs).count() == 1) out.insert(x);
  });
  return out;
}

}  // namespace cdlat
