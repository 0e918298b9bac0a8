#include "cdlat/circles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "cdlat/errors.hpp"

namespace cdlat {

std::vector<std::size_t> CircleSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

void validate_family(const CircleFamily& family) {
  if (family.size() > kMaxFamilySize) {
    throw PreconditionViolated("families are limited to " + std::to_string(kMaxFamilySize) +
                               " circles");
  }
  std::set<std::string> ids;
  for (const Circle& c : family.circles) {
    if (!ids.insert(c.id).second) throw PreconditionViolated("duplicate circle id " + c.id);
    if (!(c.r >= 0.0) || !std::isfinite(c.r) || !std::isfinite(c.cx) || !std::isfinite(c.cy)) {
      throw PreconditionViolated("circle " + c.id + " needs finite coordinates and r >= 0");
    }
    if (family.mode == CircleMode::collinear && c.cy != 0.0) {
      throw NotCollinear("circle " + c.id + " is off the x axis in a collinear family");
    }
  }
}

std::string format_circle_set(const CircleFamily& family, CircleSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.members()) {
    if (!first) out += ',';
    out += family.circles[i].id;
    first = false;
  }
  return out + "}";
}

Endpoints endpoints(const Circle& circle) {
  if (circle.cy != 0.0) throw NotCollinear("circle " + circle.id + " is not centred on the x axis");
  return {circle.cx - circle.r, circle.cx + circle.r};
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Open arc of directions (start, start + length); length in [0, 2π].
struct Arc {
  double start = 0.0;
  double length = 0.0;
  bool full() const { return length >= kTwoPi; }
  bool empty() const { return length <= 0.0; }
};

double wrap(double angle) {
  double a = std::fmod(angle, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

// Directions θ where (c - d)·u(θ) + (r_c - r_d) > threshold.
Arc dominance_arc(const Circle& c, const Circle& d, double threshold) {
  const double dx = c.cx - d.cx;
  const double dy = c.cy - d.cy;
  const double rho = std::hypot(dx, dy);
  const double slack = threshold - (c.r - d.r);
  if (rho == 0.0) return slack < 0.0 ? Arc{0.0, kTwoPi} : Arc{0.0, 0.0};
  const double t = slack / rho;
  if (t >= 1.0) return {0.0, 0.0};
  if (t < -1.0) return {0.0, kTwoPi};
  const double half = std::acos(t);
  return {wrap(std::atan2(dy, dx) - half), 2.0 * half};
}

// Whether a family of open arcs has a common direction. A component of the
// intersection begins at the start of one of the arcs, so it suffices to
// measure, for each start, how far every arc extends past it.
bool arcs_intersect(const std::vector<Arc>& arcs) {
  std::vector<Arc> partial;
  for (const Arc& a : arcs) {
    if (a.empty()) return false;
    if (!a.full()) partial.push_back(a);
  }
  if (partial.empty()) return true;
  for (const Arc& from : partial) {
    double common = from.length;
    for (const Arc& other : partial) {
      double offset = wrap(from.start - other.start);
      double reach = offset < other.length ? other.length - offset : 0.0;
      common = std::min(common, reach);
      if (common <= 0.0) break;
    }
    if (common > 0.0) return true;
  }
  return false;
}

bool same_circle(const Circle& a, const Circle& b) {
  return a.cx == b.cx && a.cy == b.cy && a.r == b.r;
}

std::vector<Circle> pick(const CircleFamily& family, CircleSet set) {
  std::vector<Circle> out;
  for (std::size_t i : set.members()) out.push_back(family.circles[i]);
  return out;
}

void require_collinear(const CircleFamily& family) {
  if (family.mode != CircleMode::collinear) {
    throw NotCollinear("operation needs a collinear family");
  }
}

CircleLattice lattice_of_sets(std::vector<CircleSet> sets) {
  std::sort(sets.begin(), sets.end(), [](CircleSet a, CircleSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  Lattice lattice = Lattice::from_order(
      sets.size(), [&](Element x, Element y) { return sets[x].is_subset_of(sets[y]); });
  return CircleLattice{std::move(lattice), std::move(sets)};
}

}  // namespace

bool circle_in_hull(const Circle& c, std::span<const Circle> hull, double eps) {
  if (hull.empty()) return false;
  for (const Circle& d : hull) {
    if (same_circle(c, d)) return true;
  }
  std::vector<Arc> strict;
  std::vector<Arc> loose;
  strict.reserve(hull.size());
  loose.reserve(hull.size());
  for (const Circle& d : hull) {
    strict.push_back(dominance_arc(c, d, eps));
    loose.push_back(dominance_arc(c, d, -eps));
  }
  // Some direction where c sticks out of every disk by more than eps.
  if (arcs_intersect(strict)) return false;
  // No direction where c even comes within eps of sticking out.
  if (!arcs_intersect(loose)) return true;
  throw DegenerateInput("circle " + c.id + " touches the hull boundary within tolerance");
}

bool is_closed(const CircleFamily& family, CircleSet set, double eps) {
  if (set.empty()) return true;
  const std::vector<Circle> hull = pick(family, set);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!set.contains(i) && circle_in_hull(family.circles[i], hull, eps)) return false;
  }
  return true;
}

CircleSet closure(const CircleFamily& family, CircleSet seed, double eps) {
  CircleSet current = seed;
  bool grew = !current.empty();
  while (grew) {
    grew = false;
    const std::vector<Circle> hull = pick(family, current);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!current.contains(i) && circle_in_hull(family.circles[i], hull, eps)) {
        current.insert(i);
        grew = true;
      }
    }
  }
  return current;
}

std::vector<std::string> CircleLattice::labels(const CircleFamily& family) const {
  std::vector<std::string> out;
  out.reserve(closed.size());
  for (CircleSet s : closed) out.push_back(format_circle_set(family, s));
  return out;
}

std::optional<Element> CircleLattice::element_of(CircleSet set) const {
  auto it = std::find(closed.begin(), closed.end(), set);
  if (it == closed.end()) return std::nullopt;
  return static_cast<Element>(it - closed.begin());
}

CircleLattice lat_geometric(const CircleFamily& family, std::size_t cap, double eps) {
  validate_family(family);
  if (family.size() > cap) {
    throw CapExceeded("family has " + std::to_string(family.size()) +
                      " circles, geometric cap is " + std::to_string(cap));
  }
  std::vector<CircleSet> closed_sets;
  const std::uint64_t limit = std::uint64_t{1} << family.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (is_closed(family, CircleSet(bits), eps)) closed_sets.emplace_back(bits);
  }
  return lattice_of_sets(std::move(closed_sets));
}

bool is_separated(const CircleFamily& family, double eps) {
  require_collinear(family);
  std::vector<Endpoints> ends;
  for (const Circle& c : family.circles) ends.push_back(endpoints(c));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      for (double p : {ends[i].left, ends[i].right}) {
        for (double q : {ends[j].left, ends[j].right}) {
          if (std::abs(p - q) <= eps) return false;
        }
      }
    }
  }
  return true;
}

Verdict is_concave(const CircleFamily& family, double eps) {
  require_collinear(family);
  const std::size_t n = family.size();
  std::vector<Endpoints> ends;
  for (const Circle& c : family.circles) ends.push_back(endpoints(c));
  for (std::size_t first = 0; first < n; ++first) {
    for (std::size_t last = 0; last < n; ++last) {
      CircleSet hull;
      bool computed = false;
      for (std::size_t mid = 0; mid < n; ++mid) {
        if (mid == first || mid == last) continue;
        if (!(ends[first].left <= ends[mid].left && ends[mid].right <= ends[last].right)) continue;
        if (!computed) {
          hull = closure(family, CircleSet::single(first) | CircleSet::single(last), eps);
          computed = true;
        }
        if (!hull.contains(mid)) return {false, {first, mid, last}};
      }
    }
  }
  return {};
}

std::optional<CircleSet> horizontal_interval(const CircleFamily& family, std::size_t a,
                                             std::size_t b) {
  require_collinear(family);
  const Endpoints ea = endpoints(family.circles[a]);
  const Endpoints eb = endpoints(family.circles[b]);
  CircleSet members;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Endpoints e = endpoints(family.circles[i]);
    if (ea.left <= e.left && e.right <= eb.right) members.insert(i);
  }
  if (!members.contains(a) || !members.contains(b)) return std::nullopt;
  return members;
}

CircleLattice lat_interval(const CircleFamily& family, double eps) {
  validate_family(family);
  require_collinear(family);
  if (!is_separated(family, eps)) throw PreconditionViolated("family is not separated");
  if (!is_concave(family, eps)) throw PreconditionViolated("family is not concave");
  std::vector<CircleSet> sets{CircleSet()};
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (auto interval = horizontal_interval(family, a, b)) sets.push_back(*interval);
    }
  }
  return lattice_of_sets(std::move(sets));
}

std::pair<std::size_t, std::size_t> canonical_decomposition(const CircleFamily& family,
                                                            CircleSet x) {
  require_collinear(family);
  if (x.empty()) throw PreconditionViolated("the empty set has no decomposition");
  const std::vector<std::size_t> members = x.members();
  std::size_t a = members.front();
  std::size_t b = members.front();
  for (std::size_t i : members) {
    if (endpoints(family.circles[i]).left < endpoints(family.circles[a]).left) a = i;
    if (endpoints(family.circles[i]).right > endpoints(family.circles[b]).right) b = i;
  }
  auto interval = horizontal_interval(family, a, b);
  if (!interval || *interval != x) {
    throw NotClosed(format_circle_set(family, x) + " is not a horizontal interval");
  }
  return {a, b};
}

}  // namespace cdlat
