#pragma once

// Brute-force reference implementations. They work from an explicit order
// matrix or from raw geometry and share no code with the library beyond the
// plain data types.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cdlat/circles.hpp"
#include "cdlat/islands.hpp"
#include "cdlat/lattice.hpp"

namespace oracle {

using Order = std::vector<std::vector<bool>>;  // order[x][y] <=> x <= y
using Subset = std::vector<std::size_t>;

Order order_of(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);
Order order_of(const cdlat::Lattice& l);

std::size_t meet(const Order& o, std::size_t x, std::size_t y);
std::size_t join(const Order& o, std::size_t x, std::size_t y);
std::size_t bottom(const Order& o);
std::size_t top(const Order& o);
bool covers(const Order& o, std::size_t x, std::size_t y);
std::size_t longest_chain_length(const Order& o);
bool distributive(const Order& o);

bool cd_independent(const Order& o, const Subset& xs);
// All maximal CD-independent subsets by scanning every subset; |L| <= 16.
std::vector<Subset> maximal_cd_sets(const Order& o);
std::optional<std::size_t> pseudocomplement(const Order& o, std::size_t a);

// Compares support functions on `samples` directions. Returns nullopt when the
// smallest margin is within `tol` of zero.
std::optional<bool> sampled_in_hull(const cdlat::Circle& c, const std::vector<cdlat::Circle>& hull,
                                    int samples = 20000, double tol = 1e-6);

bool island(const cdlat::islands::HeightFunction& h, const cdlat::islands::CellRect& r);
// Point-set laminarity over explicit vertex sets.
bool laminar(const std::vector<cdlat::islands::PointRect>& rects);

}  // namespace oracle
