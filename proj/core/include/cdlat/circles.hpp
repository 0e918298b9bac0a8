#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/lattice.hpp"
#include "cdlat/properties.hpp"

namespace cdlat {

// Tolerance on support-function values, in plane units.
inline constexpr double kDefaultEpsilon = 1e-9;
// Largest family lat_geometric accepts by default (it visits all subsets).
inline constexpr std::size_t kDefaultGeometricCap = 10;
inline constexpr std::size_t kMaxFamilySize = 64;

struct Circle {
  std::string id;
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

enum class CircleMode { general, collinear };

// Circles are referred to by their position in `circles`.
struct CircleFamily {
  std::vector<Circle> circles;
  CircleMode mode = CircleMode::general;

  std::size_t size() const noexcept { return circles.size(); }
};

// Checks ids are unique, radii nonnegative, |F| <= 64, and cy = 0 in
// collinear mode. Throws PreconditionViolated or NotCollinear.
void validate_family(const CircleFamily& family);

// A subset of a family, bit i standing for circles[i].
class CircleSet {
 public:
  constexpr CircleSet() = default;
  constexpr explicit CircleSet(std::uint64_t bits) : bits_(bits) {}
  static CircleSet single(std::size_t i) { return CircleSet(std::uint64_t{1} << i); }
  static CircleSet all(std::size_t n) {
    return CircleSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  bool empty() const { return bits_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_subset_of(CircleSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<std::size_t> members() const;

  friend CircleSet operator&(CircleSet a, CircleSet b) { return CircleSet(a.bits_ & b.bits_); }
  friend CircleSet operator|(CircleSet a, CircleSet b) { return CircleSet(a.bits_ | b.bits_); }
  friend bool operator==(CircleSet a, CircleSet b) = default;
  friend auto operator<=>(CircleSet a, CircleSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// "{A,B}" using circle ids in family order.
std::string format_circle_set(const CircleFamily& family, CircleSet set);

// Leftmost and rightmost axis points of a circle centred on the x axis.
struct Endpoints {
  double left = 0.0;
  double right = 0.0;
};

// Throws NotCollinear unless cy = 0.
Endpoints endpoints(const Circle& circle);

// Whether the disk of `c` lies in the convex hull of the union of the disks
// in `hull`. A circle equal to some member of `hull` is inside. Decided by
// support functions: for each D the open arc of directions where c's support
// exceeds D's is computed, and c is inside iff these arcs have empty
// intersection. Throws DegenerateInput when the verdict changes within `eps`
// of the support values. An empty `hull` contains nothing.
bool circle_in_hull(const Circle& c, std::span<const Circle> hull,
                    double eps = kDefaultEpsilon);

// Smallest closed superset of `seed`.
CircleSet closure(const CircleFamily& family, CircleSet seed, double eps = kDefaultEpsilon);

bool is_closed(const CircleFamily& family, CircleSet set, double eps = kDefaultEpsilon);

// The lattice of closed subsets of a family together with the closed set
// carried by each element. Elements are numbered by (size, bit pattern), so
// element 0 is the empty set and the last element is the whole family.
struct CircleLattice {
  Lattice lattice;
  std::vector<CircleSet> closed;

  std::vector<std::string> labels(const CircleFamily& family) const;
  std::optional<Element> element_of(CircleSet set) const;
};

// All closed subsets by exhaustive closedness tests. Throws CapExceeded when
// |F| > cap.
CircleLattice lat_geometric(const CircleFamily& family, std::size_t cap = kDefaultGeometricCap,
                            double eps = kDefaultEpsilon);

// Collinear families only (NotCollinear otherwise). Separated means all axis
// endpoints of distinct circles differ by more than eps.
bool is_separated(const CircleFamily& family, double eps = kDefaultEpsilon);

// Whenever lmpt C1 <= lmpt C2 and rmpt C2 <= rmpt C3, C2 lies in the closure
// of {C1, C3}. Witness: the failing triple (C1, C2, C3) as indices.
Verdict is_concave(const CircleFamily& family, double eps = kDefaultEpsilon);

// F[A, B] = {C : lmpt A <= lmpt C, rmpt C <= rmpt B}, defined only when it
// contains both A and B.
std::optional<CircleSet> horizontal_interval(const CircleFamily& family, std::size_t a,
                                             std::size_t b);

// {∅} ∪ {F[A, B]} for a separated concave collinear family, ordered by
// inclusion. Throws PreconditionViolated naming the missing property.
CircleLattice lat_interval(const CircleFamily& family, double eps = kDefaultEpsilon);

// The unique (A, B) with X = F[A, B]: A has the leftmost left endpoint in X,
// B the rightmost right endpoint. Throws NotClosed if X is not an interval.
std::pair<std::size_t, std::size_t> canonical_decomposition(const CircleFamily& family,
                                                            CircleSet x);

// Circle file format:
//
//   mode collinear|general
//   <id> <cx> <cy> <r>      one circle per line, decimal numbers
//
// '#' starts a comment line.
CircleFamily read_circles(std::istream& in);
CircleFamily read_circles_file(const std::string& path);
void write_circles(std::ostream& out, const CircleFamily& family);

// Static SVG drawing of the family; circles in `shaded` are filled.
std::string render_svg(const CircleFamily& family, std::optional<CircleSet> shaded = std::nullopt);

}  // namespace cdlat
