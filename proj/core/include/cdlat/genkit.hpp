#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cdlat/circles.hpp"
#include "cdlat/islands.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat::gen {

// Bumped whenever a generator's output for a fixed seed changes.
inline constexpr int kGeneratorVersion = 1;
inline constexpr std::size_t kMaxPosetSize = 5;

// Seeded source built on std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Draws are derived from raw 64-bit words only, never from
// the implementation-defined <random> distributions:
//   below(n)  drop words under 2^64 mod n, reduce the rest modulo n
//   unit()    (word >> 11) * 2^-53
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);
  // Uniform integer in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// A strict partial order on 0..k-1; bit j of below[i] means j < i.
struct Poset {
  std::size_t k = 0;
  std::vector<std::uint32_t> below;

  bool less(std::size_t i, std::size_t j) const { return (below[j] >> i) & 1U; }
};

// Every labeled partial order on k points exactly once, by brute force over
// relation matrices. Throws CapExceeded for k > 5.
std::vector<Poset> all_posets(std::size_t k);

struct DownsetLattice {
  Lattice lattice;
  std::vector<std::uint32_t> downsets;  // element i is the down-set downsets[i]
};

// Inclusion lattice of the down-closed subsets of a poset (distributive).
DownsetLattice downset_lattice(const Poset& poset);

// Boolean lattice of subsets of {1..k}; element i is the subset with bit
// pattern i, bit 0 standing for 1.
Lattice boolean_lattice(std::size_t k);
// Chain 0 < 1 < ... < n-1.
Lattice chain(std::size_t n);
// 0, three pairwise incomparable atoms 1..3, top 4.
Lattice m3();
// 0 = bottom, 1 = a, 2 = b, 3 = c, 4 = top with 0 < a < b < 1, 0 < c < 1.
Lattice n5();
// n5() with a new top 5 above the old top 4.
Lattice n5_top();

struct CircleOptions {
  bool allow_encapsulation = true;
  bool force_separated = false;
  bool force_concave = false;
  std::size_t rejection_budget = 200000;
  double eps = kDefaultEpsilon;
};

// Deterministic in (seed, count, mode, options). Centres lie in [0, 100]
// (on the x axis in collinear mode) and radii in [0, 12], all multiples of
// 1/1000. Families whose hull tests fall within eps of a boundary are
// resampled, as are families violating the forced properties. Throws
// RejectionBudgetExceeded when no family qualifies within the budget.
CircleFamily random_circle_family(std::uint64_t seed, std::size_t count, CircleMode mode,
                                  const CircleOptions& options = {});

// Heights drawn uniformly from 0..max_height, row-major from a fresh Rng(seed).
islands::HeightFunction random_heights(std::uint64_t seed, islands::Board board, int max_height);

// Laminar growth: starting from the board, `steps` times pick a member and a
// random proper sub-rectangle of it, keeping the rectangle when the grids stay
// laminar. Returns a sorted system that contains the board.
islands::IslandSystem random_laminar_system(std::uint64_t seed, islands::Board board,
                                            std::size_t steps);

// Three disjoint collinear circles A < B < C with B in the hull of A and C.
CircleFamily three_circle_family();

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  std::optional<CircleFamily> circles;
  std::string note;
  // A maximal CD-independent subset smaller than length + |atoms|, when the
  // entry is there to exhibit one.
  std::optional<ElementSet> short_maximal;
};

// Fixed catalog: chains, boolean lattices, M3, N5, N5 with a new top, and
// lattices of fixed circle families, two of which carry short maximal
// CD-independent subsets.
std::vector<CatalogEntry> named_lattices();

}  // namespace cdlat::gen
