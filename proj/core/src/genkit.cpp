#include "cdlat/genkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cdlat/cd_independence.hpp"
#include "cdlat/errors.hpp"

namespace cdlat::gen {

std::uint64_t Rng::below(std::uint64_t n) {
  // Words below 2^64 mod n are discarded so the remainder is unbiased.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

std::vector<Poset> all_posets(std::size_t k) {
  if (k > kMaxPosetSize) {
    throw CapExceeded("poset enumeration is limited to " + std::to_string(kMaxPosetSize) +
                      " points");
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<Poset> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t code = 0; code < limit; ++code) {
    Poset p{k, std::vector<std::uint32_t>(k, 0)};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (code >> s & 1U) p.below[slots[s].second] |= 1U << slots[s].first;
    }
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (!p.less(i, j)) continue;
        if (p.less(j, i)) ok = false;
        // Transitivity: everything below i is below j.
        if ((p.below[i] & ~p.below[j]) != 0) ok = false;
      }
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

DownsetLattice downset_lattice(const Poset& poset) {
  std::vector<std::uint32_t> downsets;
  for (std::uint32_t s = 0; s < (1U << poset.k); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < poset.k && closed; ++i) {
      if ((s >> i & 1U) && (poset.below[i] & ~s) != 0) closed = false;
    }
    if (closed) downsets.push_back(s);
  }
  Lattice lattice = Lattice::from_order(downsets.size(), [&](Element x, Element y) {
    return (downsets[x] & ~downsets[y]) == 0;
  });
  return {std::move(lattice), std::move(downsets)};
}

Lattice boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  return Lattice::from_order(n, [](Element x, Element y) { return (x & ~y) == 0; });
}

Lattice chain(std::size_t n) {
  return Lattice::from_order(n, [](Element x, Element y) { return x <= y; });
}

Lattice m3() {
  const std::vector<CoverPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return Lattice::from_covers(5, covers);
}

Lattice n5() {
  const std::vector<CoverPair> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Lattice::from_covers(5, covers);
}

Lattice n5_top() {
  const std::vector<CoverPair> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}, {4, 5}};
  return Lattice::from_covers(6, covers);
}

namespace {

std::string circle_id(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "C" + std::to_string(i + 1);
}

double draw_coordinate(Rng& rng, long long lo_milli, long long hi_milli) {
  return static_cast<double>(rng.between(lo_milli, hi_milli)) / 1000.0;
}

bool has_encapsulation(const CircleFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      const Circle& a = f.circles[i];
      const Circle& b = f.circles[j];
      if (std::hypot(a.cx - b.cx, a.cy - b.cy) + b.r <= a.r) return true;
    }
  }
  return false;
}

bool acceptable(const CircleFamily& f, const CircleOptions& options) {
  if (!options.allow_encapsulation && has_encapsulation(f)) return false;
  try {
    if (f.mode == CircleMode::collinear) {
      if (options.force_separated && !is_separated(f, options.eps)) return false;
      if (options.force_concave && !is_concave(f, options.eps)) return false;
    }
    if (f.size() <= kDefaultGeometricCap) lat_geometric(f, kDefaultGeometricCap, options.eps);
  } catch (const DegenerateInput&) {
    return false;
  }
  return true;
}

}  // namespace

CircleFamily random_circle_family(std::uint64_t seed, std::size_t count, CircleMode mode,
                                  const CircleOptions& options) {
  if (count == 0 || count > kDefaultGeometricCap) {
    throw PreconditionViolated("random families hold 1 to " +
                               std::to_string(kDefaultGeometricCap) + " circles");
  }
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < options.rejection_budget; ++attempt) {
    CircleFamily f;
    f.mode = mode;
    for (std::size_t i = 0; i < count; ++i) {
      Circle c;
      c.id = circle_id(i);
      c.cx = draw_coordinate(rng, 0, 100000);
      c.cy = mode == CircleMode::collinear ? 0.0 : draw_coordinate(rng, 0, 100000);
      c.r = draw_coordinate(rng, 0, 12000);
      f.circles.push_back(std::move(c));
    }
    if (acceptable(f, options)) return f;
  }
  throw RejectionBudgetExceeded("no qualifying family for seed " + std::to_string(seed) +
                                " within " + std::to_string(options.rejection_budget) +
                                " attempts");
}

islands::HeightFunction random_heights(std::uint64_t seed, islands::Board board, int max_height) {
  Rng rng(seed);
  std::vector<int> values(static_cast<std::size_t>(board.cells()));
  for (int& v : values) v = static_cast<int>(rng.between(0, max_height));
  return islands::HeightFunction(board, std::move(values));
}

islands::IslandSystem random_laminar_system(std::uint64_t seed, islands::Board board,
                                            std::size_t steps) {
  Rng rng(seed);
  islands::IslandSystem system{islands::CellRect::whole(board)};
  for (std::size_t step = 0; step < steps; ++step) {
    const islands::CellRect parent = system[rng.below(system.size())];
    islands::CellRect r;
    r.c1 = static_cast<int>(rng.between(parent.c1, parent.c2));
    r.c2 = static_cast<int>(rng.between(r.c1, parent.c2));
    r.r1 = static_cast<int>(rng.between(parent.r1, parent.r2));
    r.r2 = static_cast<int>(rng.between(r.r1, parent.r2));
    if (std::find(system.begin(), system.end(), r) != system.end()) continue;
    system.push_back(r);
    if (!islands::is_laminar(islands::sgrid(system))) system.pop_back();
  }
  std::sort(system.begin(), system.end());
  return system;
}

CircleFamily three_circle_family() {
  return CircleFamily{{{"A", 0.0, 0.0, 1.0}, {"B", 5.0, 0.0, 0.5}, {"C", 10.0, 0.0, 1.0}},
                      CircleMode::collinear};
}

namespace {

// Five separated concave collinear circles; C encapsulates A and E, D
// encapsulates E. Found by
// seeded search (collinear, separated, concave, seed 87).
CircleFamily slim_gap_family() {
  return CircleFamily{{{"A", 50.505, 0.0, 1.928},
                       {"B", 44.104, 0.0, 7.305},
                       {"C", 51.907, 0.0, 4.334},
                       {"D", 61.735, 0.0, 11.284},
                       {"E", 53.592, 0.0, 0.294}},
                      CircleMode::collinear};
}

// Nine points in three triples x_i, y_i, z_i. Within a triple neither
// {x_i, z_i} nor {x_i, y_i, z_i} captures another point, while the hull of
// any two triples does.
CircleFamily atomistic_gap_family() {
  return CircleFamily{{{"x1", 10, 25, 0},
                       {"y1", 6, 29, 0},
                       {"z1", 15, 7, 0},
                       {"x2", 3, 25, 0},
                       {"y2", 11, 29, 0},
                       {"z2", 1, 6, 0},
                       {"x3", 25, 30, 0},
                       {"y3", 29, 20, 0},
                       {"z3", 5, 9, 0}},
                      CircleMode::general};
}

CatalogEntry slim_gap_entry() {
  CircleFamily f = slim_gap_family();
  CircleLattice cl = lat_interval(f);
  std::optional<ElementSet> shortest;
  for (ElementSet& y : enumerate_maximal_cd(cl.lattice, cl.lattice.size())) {
    if (!shortest || y.count() < shortest->count()) shortest = std::move(y);
  }
  return {"slim_gap", std::move(cl.lattice), std::move(f),
          "separated concave collinear circles with encapsulation; a maximal CD-independent "
          "subset has 7 elements against length + |atoms| = 8",
          std::move(shortest)};
}

// Y = atoms, empty set, F, {x_i, z_i} and {x_i, y_i, z_i}: 17 elements
// against length + |atoms| = 18.
CatalogEntry atomistic_gap_entry() {
  CircleFamily f = atomistic_gap_family();
  CircleLattice cl = lat_geometric(f, f.size());
  ElementSet y = cl.lattice.empty_set();
  auto add = [&](std::uint64_t bits) {
    if (auto e = cl.element_of(CircleSet(bits))) y.insert(*e);
  };
  add(0);
  add(CircleSet::all(f.size()).bits());
  for (std::size_t i = 0; i < f.size(); ++i) add(std::uint64_t{1} << i);
  for (std::size_t t = 0; t < 3; ++t) {
    add(std::uint64_t{5} << (3 * t));
    add(std::uint64_t{7} << (3 * t));
  }
  return {"atomistic_gap", std::move(cl.lattice), std::move(f),
          "nine points in three triples; atomistic, with a 17-element maximal "
          "CD-independent subset against length + |atoms| = 18",
          std::move(y)};
}

}  // namespace

std::vector<CatalogEntry> named_lattices() {
  std::vector<CatalogEntry> out;
  auto plain = [&](std::string name, Lattice l, std::string note) {
    out.push_back({std::move(name), std::move(l), std::nullopt, std::move(note), std::nullopt});
  };
  for (std::size_t n = 1; n <= 8; ++n) {
    plain("chain" + std::to_string(n), chain(n), "chain with " + std::to_string(n) + " elements");
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    plain("B" + std::to_string(k), boolean_lattice(k),
          "boolean lattice of subsets of a " + std::to_string(k) + "-set");
  }
  plain("M3", m3(), "diamond");
  plain("N5", n5(), "pentagon: 1=a, 2=b, 3=c with a<b");
  plain("N5top", n5_top(), "pentagon with a new top");
  {
    CircleFamily f = three_circle_family();
    out.push_back({"three_circles", lat_interval(f).lattice, f,
                   "three disjoint collinear circles, middle in the outer hull", std::nullopt});
  }
  out.push_back(slim_gap_entry());
  out.push_back(atomistic_gap_entry());
  return out;
}

}  // namespace cdlat::gen
