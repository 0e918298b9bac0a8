#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace oracle {

Order order_of(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  Order o(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) o[x][y] = leq(x, y);
  }
  return o;
}

Order order_of(const cdlat::Lattice& l) {
  return order_of(l.size(), [&](std::size_t x, std::size_t y) { return l.leq(x, y); });
}

std::size_t meet(const Order& o, std::size_t x, std::size_t y) {
  const std::size_t n = o.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!o[z][x] || !o[z][y]) continue;
    bool greatest = true;
    for (std::size_t w = 0; w < n && greatest; ++w) {
      if (o[w][x] && o[w][y] && !o[w][z]) greatest = false;
    }
    if (greatest) return z;
  }
  return n;
}

std::size_t join(const Order& o, std::size_t x, std::size_t y) {
  const std::size_t n = o.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!o[x][z] || !o[y][z]) continue;
    bool least = true;
    for (std::size_t w = 0; w < n && least; ++w) {
      if (o[x][w] && o[y][w] && !o[z][w]) least = false;
    }
    if (least) return z;
  }
  return n;
}

std::size_t bottom(const Order& o) {
  for (std::size_t z = 0; z < o.size(); ++z) {
    if (std::all_of(o[z].begin(), o[z].end(), [](bool b) { return b; })) return z;
  }
  return o.size();
}

std::size_t top(const Order& o) {
  for (std::size_t z = 0; z < o.size(); ++z) {
    bool all = true;
    for (std::size_t x = 0; x < o.size(); ++x) all = all && o[x][z];
    if (all) return z;
  }
  return o.size();
}

bool covers(const Order& o, std::size_t x, std::size_t y) {
  if (x == y || !o[x][y]) return false;
  for (std::size_t z = 0; z < o.size(); ++z) {
    if (z != x && z != y && o[x][z] && o[z][y]) return false;
  }
  return true;
}

std::size_t longest_chain_length(const Order& o) {
  const std::size_t n = o.size();
  // Depth-first over strict chains starting at each element.
  std::function<std::size_t(std::size_t)> up = [&](std::size_t x) {
    std::size_t best = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && o[x][y]) best = std::max(best, 1 + up(y));
    }
    return best;
  };
  std::size_t best = 0;
  for (std::size_t x = 0; x < n; ++x) best = std::max(best, up(x));
  return best;
}

bool distributive(const Order& o) {
  const std::size_t n = o.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (meet(o, x, join(o, y, z)) != join(o, meet(o, x, y), meet(o, x, z))) return false;
      }
    }
  }
  return true;
}

bool cd_independent(const Order& o, const Subset& xs) {
  const std::size_t zero = bottom(o);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const std::size_t a = xs[i], b = xs[j];
      if (o[a][b] || o[b][a]) continue;
      if (meet(o, a, b) != zero) return false;
    }
  }
  return true;
}

std::vector<Subset> maximal_cd_sets(const Order& o) {
  const std::size_t n = o.size();
  std::vector<std::uint32_t> independent;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Subset xs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) xs.push_back(i);
    }
    if (cd_independent(o, xs)) independent.push_back(mask);
  }
  std::set<std::uint32_t> lookup(independent.begin(), independent.end());
  std::vector<Subset> out;
  for (std::uint32_t mask : independent) {
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!(mask >> i & 1U) && lookup.count(mask | (1U << i))) maximal = false;
    }
    if (!maximal) continue;
    Subset xs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) xs.push_back(i);
    }
    out.push_back(xs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> pseudocomplement(const Order& o, std::size_t a) {
  const std::size_t zero = bottom(o);
  std::vector<std::size_t> disjoint;
  for (std::size_t x = 0; x < o.size(); ++x) {
    if (meet(o, a, x) == zero) disjoint.push_back(x);
  }
  for (std::size_t c : disjoint) {
    if (std::all_of(disjoint.begin(), disjoint.end(), [&](std::size_t x) { return o[x][c]; })) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<bool> sampled_in_hull(const cdlat::Circle& c, const std::vector<cdlat::Circle>& hull,
                                    int samples, double tol) {
  if (hull.empty()) return false;
  double worst = 1e300;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    const double ux = std::cos(t), uy = std::sin(t);
    double best = -1e300;
    for (const cdlat::Circle& d : hull) best = std::max(best, d.cx * ux + d.cy * uy + d.r);
    worst = std::min(worst, best - (c.cx * ux + c.cy * uy + c.r));
  }
  if (std::abs(worst) <= tol) return std::nullopt;
  return worst > 0;
}

bool island(const cdlat::islands::HeightFunction& h, const cdlat::islands::CellRect& r) {
  const auto& b = h.board();
  int lowest = 1 << 30;
  for (int row = r.r1; row <= r.r2; ++row) {
    for (int col = r.c1; col <= r.c2; ++col) lowest = std::min(lowest, h.at(col, row));
  }
  for (int row = 1; row <= b.n; ++row) {
    for (int col = 1; col <= b.m; ++col) {
      if (r.contains(col, row)) continue;
      // Chebyshev distance from the cell to the rectangle.
      const int dx = std::max({r.c1 - col, col - r.c2, 0});
      const int dy = std::max({r.r1 - row, row - r.r2, 0});
      if (std::max(dx, dy) == 1 && h.at(col, row) >= lowest) return false;
    }
  }
  return true;
}

bool laminar(const std::vector<cdlat::islands::PointRect>& rects) {
  std::vector<std::set<std::pair<int, int>>> points;
  for (const auto& r : rects) {
    std::set<std::pair<int, int>> s;
    for (int x = r.x0; x <= r.x1; ++x) {
      for (int y = r.y0; y <= r.y1; ++y) s.emplace(x, y);
    }
    points.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& a = points[i];
      const auto& b = points[j];
      const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
      bool shared = false;
      for (const auto& p : a) {
        if (b.count(p)) {
          shared = true;
          break;
        }
      }
      if (!a_in_b && !b_in_a && shared) return false;
    }
  }
  return true;
}

}  // namespace oracle
