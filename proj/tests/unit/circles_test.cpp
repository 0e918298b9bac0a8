#include <gtest/gtest.h>

#include <iostream>

#include "cdlat/circles.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/genkit.hpp"
#include "cdlat/properties.hpp"
#include "oracles.hpp"

using namespace cdlat;

namespace {

CircleFamily collinear(std::vector<Circle> cs) { return {std::move(cs), CircleMode::collinear}; }

CircleSet ids(const CircleFamily& f, const std::string& letters) {
  CircleSet s;
  for (char ch : letters) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.circles[i].id == std::string(1, ch)) s.insert(i);
    }
  }
  return s;
}

gen::CircleOptions separated_concave() {
  gen::CircleOptions o;
  o.force_separated = true;
  o.force_concave = true;
  return o;
}

}  // namespace

TEST(Circles, Endpoints) {
  const Endpoints a = endpoints({"A", 0, 0, 1});
  EXPECT_DOUBLE_EQ(a.left, -1);
  EXPECT_DOUBLE_EQ(a.right, 1);
  const Endpoints p = endpoints({"P", 5, 0, 0});
  EXPECT_DOUBLE_EQ(p.left, 5);
  EXPECT_DOUBLE_EQ(p.right, 5);
  const Endpoints c = endpoints({"C", 10, 0, 0.5});
  EXPECT_DOUBLE_EQ(c.left, 9.5);
  EXPECT_DOUBLE_EQ(c.right, 10.5);
  EXPECT_THROW(endpoints({"D", 0, 1, 1}), NotCollinear);
}

TEST(Circles, HullExamples) {
  const Circle a{"A", 0, 0, 1}, b{"B", 10, 0, 1};
  const std::vector<Circle> ab{a, b};
  EXPECT_TRUE(circle_in_hull(a, ab));
  EXPECT_TRUE(circle_in_hull({"C", 5, 0, 0.5}, ab));
  EXPECT_FALSE(circle_in_hull({"C", 5, 0, 2}, ab));
  EXPECT_EQ(oracle::sampled_in_hull({"C", 5, 0, 0.5}, ab), std::optional<bool>(true));
  EXPECT_EQ(oracle::sampled_in_hull({"C", 5, 0, 2}, ab), std::optional<bool>(false));
  EXPECT_FALSE(circle_in_hull(a, {}));
}

TEST(Circles, TangentToHullIsDegenerate) {
  const std::vector<Circle> ab{{"A", 0, 0, 1}, {"B", 10, 0, 1}};
  EXPECT_THROW(circle_in_hull({"C", 5, 0, 1}, ab), DegenerateInput);
}

TEST(Circles, HullAgreesWithAngularSampling) {
  gen::Rng rng(20240611);
  std::size_t decided = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto draw = [&](const std::string& id) {
      return Circle{id, static_cast<double>(rng.between(0, 20000)) / 1000.0,
                    static_cast<double>(rng.between(0, 20000)) / 1000.0,
                    static_cast<double>(rng.between(0, 6000)) / 1000.0};
    };
    std::vector<Circle> hull;
    const std::size_t k = 1 + rng.below(4);
    for (std::size_t i = 0; i < k; ++i) hull.push_back(draw("D" + std::to_string(i)));
    const Circle c = draw("C");
    const std::optional<bool> expected = oracle::sampled_in_hull(c, hull, 20000, 1e-3);
    if (!expected) continue;
    try {
      EXPECT_EQ(circle_in_hull(c, hull), *expected) << "trial " << trial;
      ++decided;
    } catch (const DegenerateInput&) {
      ADD_FAILURE() << "degenerate verdict far from the boundary, trial " << trial;
    }
  }
  EXPECT_GT(decided, 2500u);
}

// Collinear families: does containment in the hull of three or more circles
// always come from some pair among them? Pairwise containment implies full
// containment; the converse is only counted.
TEST(Circles, PairwiseHullVersusFullHull) {
  gen::Rng rng(77);
  std::size_t compared = 0;
  std::size_t divergences = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&](const std::string& id) {
      return Circle{id, static_cast<double>(rng.between(0, 30000)) / 1000.0, 0.0,
                    static_cast<double>(rng.between(0, 8000)) / 1000.0};
    };
    std::vector<Circle> hull;
    const std::size_t k = 3 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i) hull.push_back(draw("D" + std::to_string(i)));
    const Circle c = draw("C");
    try {
      const bool full = circle_in_hull(c, hull);
      bool pairwise = false;
      for (std::size_t i = 0; i < k && !pairwise; ++i) {
        for (std::size_t j = i; j < k && !pairwise; ++j) {
          const std::vector<Circle> pair{hull[i], hull[j]};
          pairwise = circle_in_hull(c, pair);
        }
      }
      if (pairwise) EXPECT_TRUE(full) << "trial " << trial;
      if (full && !pairwise) ++divergences;
      ++compared;
    } catch (const DegenerateInput&) {
    }
  }
  EXPECT_GT(compared, 1500u);
  RecordProperty("divergences", static_cast<int>(divergences));
  std::cout << "pairwise vs full hull: " << divergences << " divergences in " << compared
            << " comparisons\n";
}

TEST(Circles, ClosureExamples) {
  const CircleFamily f = gen::three_circle_family();
  EXPECT_EQ(closure(f, CircleSet()), CircleSet());
  EXPECT_EQ(closure(f, ids(f, "AC")), ids(f, "ABC"));
  EXPECT_EQ(closure(f, ids(f, "B")), ids(f, "B"));
  // D is encapsulated in A, so it joins A's closure.
  const CircleFamily g = collinear({{"A", 0, 0, 3}, {"D", 0.5, 0, 1}, {"B", 10, 0, 1}});
  EXPECT_EQ(closure(g, ids(g, "A")), ids(g, "AD"));
}

TEST(Circles, ClosureIsAClosureOperator) {
  gen::Rng rng(99);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const CircleFamily f = gen::random_circle_family(seed, 6, CircleMode::general);
    const std::uint64_t full = CircleSet::all(f.size()).bits();
    for (int trial = 0; trial < 40; ++trial) {
      const CircleSet y(rng.next() & full);
      const CircleSet z = y | CircleSet(rng.next() & full);
      const CircleSet cy = closure(f, y);
      EXPECT_TRUE(y.is_subset_of(cy));
      EXPECT_EQ(closure(f, cy), cy);
      EXPECT_TRUE(cy.is_subset_of(closure(f, z)));
    }
  }
}

TEST(Circles, LatGeometricExamples) {
  const CircleFamily one = collinear({{"A", 0, 0, 1}});
  EXPECT_EQ(lat_geometric(one).lattice.size(), 2u);
  const CircleFamily two = collinear({{"A", 0, 0, 1}, {"B", 50, 0, 1}});
  EXPECT_EQ(lat_geometric(two).lattice.size(), 4u);
  const CircleFamily f = gen::three_circle_family();
  const CircleLattice cl = lat_geometric(f);
  EXPECT_EQ(cl.lattice.size(), 7u);
  EXPECT_FALSE(cl.element_of(ids(f, "AC")).has_value());
  EXPECT_EQ(cl.closed.front(), CircleSet());
  EXPECT_EQ(cl.closed.back(), ids(f, "ABC"));
  EXPECT_THROW(lat_geometric(gen::random_circle_family(3, 10, CircleMode::general), 9),
               CapExceeded);
}

TEST(Circles, MeetIsIntersection) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CircleFamily f = gen::random_circle_family(seed, 6, CircleMode::general);
    const CircleLattice cl = lat_geometric(f);
    for (Element x = 0; x < cl.lattice.size(); ++x) {
      for (Element y = 0; y < cl.lattice.size(); ++y) {
        EXPECT_EQ(cl.closed[cl.lattice.meet(x, y)], cl.closed[x] & cl.closed[y]);
        EXPECT_EQ(cl.closed[cl.lattice.join(x, y)], closure(f, cl.closed[x] | cl.closed[y]));
      }
    }
  }
}

TEST(Circles, SeparatedAndConcave) {
  const CircleFamily tangent = collinear({{"A", 0, 0, 1}, {"B", 2, 0, 1}});
  EXPECT_FALSE(is_separated(tangent));
  const CircleFamily f = gen::three_circle_family();
  EXPECT_TRUE(is_separated(f));
  EXPECT_TRUE(is_concave(f));
  const CircleFamily bulge = collinear({{"A", 0, 0, 1}, {"B", 10, 0, 1}, {"C", 5, 0, 2}});
  const Verdict v = is_concave(bulge);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_THROW(is_separated(gen::random_circle_family(1, 3, CircleMode::general)), NotCollinear);
}

TEST(Circles, HorizontalIntervals) {
  const CircleFamily f = gen::three_circle_family();
  EXPECT_EQ(horizontal_interval(f, 0, 0), std::optional<CircleSet>(ids(f, "A")));
  EXPECT_EQ(horizontal_interval(f, 0, 2), std::optional<CircleSet>(ids(f, "ABC")));
  EXPECT_EQ(horizontal_interval(f, 2, 0), std::nullopt);
  // B encapsulated in A: F[A, B] would contain B but not A.
  const CircleFamily g = collinear({{"A", 0, 0, 3}, {"B", 0.5, 0, 1}});
  EXPECT_EQ(horizontal_interval(g, 0, 1), std::nullopt);
  EXPECT_EQ(horizontal_interval(g, 0, 0), std::optional<CircleSet>(ids(g, "AB")));
}

TEST(Circles, LatIntervalMatchesLatGeometric) {
  EXPECT_EQ(lat_interval(collinear({{"A", 0, 0, 1}})).lattice.size(), 2u);
  const CircleFamily f = gen::three_circle_family();
  EXPECT_EQ(lat_interval(f).closed, lat_geometric(f).closed);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const CircleFamily g =
        gen::random_circle_family(seed, 3 + seed % 5, CircleMode::collinear, separated_concave());
    const CircleLattice a = lat_interval(g);
    const CircleLattice b = lat_geometric(g);
    EXPECT_EQ(a.closed, b.closed) << "seed " << seed;
    EXPECT_TRUE(is_dually_slim(a.lattice)) << "seed " << seed;
    EXPECT_TRUE(is_lower_semimodular(a.lattice)) << "seed " << seed;
  }
  const CircleFamily bulge = collinear({{"A", 0, 0, 1}, {"B", 10, 0, 1}, {"C", 5, 0, 2}});
  EXPECT_THROW(lat_interval(bulge), PreconditionViolated);
}

TEST(Circles, CanonicalDecompositionIsUnique) {
  const CircleFamily f = gen::three_circle_family();
  EXPECT_EQ(canonical_decomposition(f, ids(f, "A")), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(canonical_decomposition(f, ids(f, "ABC")),
            (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_THROW(canonical_decomposition(f, ids(f, "AC")), NotClosed);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CircleFamily g =
        gen::random_circle_family(seed, 6, CircleMode::collinear, separated_concave());
    for (const CircleSet& x : lat_interval(g).closed) {
      if (x.empty()) continue;
      std::size_t matches = 0;
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          if (horizontal_interval(g, a, b) == std::optional<CircleSet>(x)) ++matches;
        }
      }
      EXPECT_EQ(matches, 1u);
      const auto [a, b] = canonical_decomposition(g, x);
      EXPECT_EQ(horizontal_interval(g, a, b), std::optional<CircleSet>(x));
    }
  }
}

TEST(Circles, LatGeometricIsMeetDistributive) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CircleFamily f = gen::random_circle_family(seed, 5, CircleMode::general);
    const Lattice l = lat_geometric(f).lattice;
    EXPECT_TRUE(is_meet_distributive(l)) << "seed " << seed;
    EXPECT_TRUE(avann_check(l)) << "seed " << seed;
  }
}

TEST(Circles, FormatAndLabels) {
  const CircleFamily f = gen::three_circle_family();
  EXPECT_EQ(format_circle_set(f, ids(f, "AB")), "{A,B}");
  EXPECT_EQ(format_circle_set(f, CircleSet()), "{}");
  const CircleLattice cl = lat_interval(f);
  EXPECT_EQ(cl.labels(f).front(), "{}");
  EXPECT_EQ(cl.labels(f).back(), "{A,B,C}");
}
