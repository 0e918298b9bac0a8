#include <gtest/gtest.h>

#include <sstream>

#include "cdlat/cd_independence.hpp"
#include "cdlat/circles.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/genkit.hpp"
#include "cdlat/properties.hpp"

using namespace cdlat;

TEST(Genkit, PosetCounts) {
  const std::vector<std::size_t> expected{1, 1, 3, 19, 219, 4231};
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(gen::all_posets(k).size(), expected[k]);
  EXPECT_THROW(gen::all_posets(6), CapExceeded);
}

TEST(Genkit, DownsetLattices) {
  const gen::Poset antichain3{3, {0, 0, 0}};
  EXPECT_EQ(gen::downset_lattice(antichain3).lattice.size(), 8u);
  const gen::Poset chain3{3, {0, 0b001, 0b011}};
  const Lattice c = gen::downset_lattice(chain3).lattice;
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(length(c), 3u);
  const gen::Poset antichain2{2, {0, 0}};
  EXPECT_EQ(gen::downset_lattice(antichain2).lattice.size(), 4u);
  for (const auto& p : gen::all_posets(4)) {
    EXPECT_TRUE(is_distributive(gen::downset_lattice(p).lattice));
  }
}

TEST(Genkit, RngIsReproducible) {
  gen::Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  // First word of mt19937_64 with the default seed, fixed by the standard.
  gen::Rng d(5489);
  EXPECT_EQ(d.next(), 14514284786278117030ULL);
  gen::Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(10), 10u);
    const double u = r.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Genkit, RandomFamiliesAreDeterministic) {
  gen::CircleOptions o;
  o.force_separated = true;
  o.force_concave = true;
  const CircleFamily a = gen::random_circle_family(11, 3, CircleMode::collinear, o);
  const CircleFamily b = gen::random_circle_family(11, 3, CircleMode::collinear, o);
  std::ostringstream sa, sb;
  write_circles(sa, a);
  write_circles(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_TRUE(is_separated(a));
  EXPECT_TRUE(is_concave(a));
  EXPECT_LE(lat_interval(a).lattice.size(), 7u);
}

TEST(Genkit, RandomFamilyRegression) {
  gen::CircleOptions o;
  o.force_separated = true;
  o.force_concave = true;
  const CircleFamily f = gen::random_circle_family(1, 3, CircleMode::collinear, o);
  std::ostringstream s;
  write_circles(s, f);
  // Recorded at generator version 1.
  ASSERT_EQ(gen::kGeneratorVersion, 1);
  EXPECT_EQ(s.str(),
            "mode collinear\n"
            "A 2.352 0 5.328\n"
            "B 26.381 0 6.307\n"
            "C 36.754 0 8.311\n");
  EXPECT_EQ(lat_interval(f).lattice.size(), 7u);
}

TEST(Genkit, SingleCircleGivesTwoChain) {
  const CircleFamily f = gen::random_circle_family(3, 1, CircleMode::general);
  EXPECT_EQ(lat_geometric(f).lattice.size(), 2u);
}

TEST(Genkit, ForcedPropertiesHold) {
  gen::CircleOptions o;
  o.force_separated = true;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_TRUE(is_separated(gen::random_circle_family(seed, 5, CircleMode::collinear, o)));
  }
  gen::CircleOptions no_nest;
  no_nest.allow_encapsulation = false;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const CircleFamily f = gen::random_circle_family(seed, 6, CircleMode::general, no_nest);
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_EQ(closure(f, CircleSet::single(i)), CircleSet::single(i));
    }
  }
  gen::CircleOptions tight;
  tight.force_separated = true;
  tight.force_concave = true;
  tight.rejection_budget = 1;
  EXPECT_THROW(
      {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
          gen::random_circle_family(seed, 10, CircleMode::collinear, tight);
        }
      },
      RejectionBudgetExceeded);
  EXPECT_THROW(gen::random_circle_family(1, 0, CircleMode::general), PreconditionViolated);
}

TEST(Genkit, Catalog) {
  const auto catalog = gen::named_lattices();
  auto find = [&](const std::string& name) {
    for (const auto& e : catalog) {
      if (e.name == name) return &e;
    }
    return static_cast<const gen::CatalogEntry*>(nullptr);
  };
  for (std::size_t n = 1; n <= 8; ++n) ASSERT_NE(find("chain" + std::to_string(n)), nullptr);
  ASSERT_NE(find("N5"), nullptr);
  EXPECT_FALSE(is_distributive(find("N5")->lattice));
  ASSERT_NE(find("B3"), nullptr);
  EXPECT_FALSE(is_dually_slim(find("B3")->lattice));
  ASSERT_NE(find("three_circles"), nullptr);
  EXPECT_EQ(find("three_circles")->lattice.size(), 7u);

  const gen::CatalogEntry* slim = find("slim_gap");
  ASSERT_NE(slim, nullptr);
  ASSERT_TRUE(slim->circles && slim->short_maximal);
  EXPECT_TRUE(is_separated(*slim->circles));
  EXPECT_TRUE(is_concave(*slim->circles));
  EXPECT_TRUE(is_dually_slim(slim->lattice));
  EXPECT_TRUE(is_meet_distributive(slim->lattice));
  EXPECT_TRUE(is_maximal_cd_independent(slim->lattice, *slim->short_maximal));
  EXPECT_GE(cd_size_bound(slim->lattice), slim->short_maximal->count() + 1);

  const gen::CatalogEntry* atomistic = find("atomistic_gap");
  ASSERT_NE(atomistic, nullptr);
  ASSERT_TRUE(atomistic->short_maximal);
  const Lattice& l = atomistic->lattice;
  EXPECT_EQ(atoms(l).count(), 9u);
  EXPECT_EQ(length(l), 9u);
  EXPECT_TRUE(avann_check(l));
  const ElementSet at = atoms(l);
  for (Element x = 0; x < l.size(); ++x) EXPECT_EQ(l.join_of(at & l.ideal(x)), x);
  EXPECT_EQ(atomistic->short_maximal->count(), 17u);
  EXPECT_EQ(cd_size_bound(l), 18u);
  EXPECT_TRUE(is_maximal_cd_independent(l, *atomistic->short_maximal));
}
