#include <gtest/gtest.h>

#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/oracle.hpp"
#include "iterlab/wand.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

TEST(Wand, ThreeStateLoop) {
  EXPECT_EQ(kleene_wand(pm(3, 3, {1, 2, U}), pm(3, 1, {U, U, 0})), pm(3, 1, {0, 0, 0}));
}

TEST(Wand, CycleIsUndefined) {
  EXPECT_EQ(kleene_wand(pm(3, 3, {1, 0, U}), pm(3, 1, {U, U, 0})), pm(3, 1, {U, U, 0}));
}

TEST(Wand, ZeroBodyAndZeroGuard) {
  const PartialMap g = pm(3, 2, {1, U, 0});
  EXPECT_EQ(kleene_wand(zero(FinObj(3), FinObj(3)), g), g);
  const PartialMap f = pm(3, 3, {1, 2, 0});
  EXPECT_EQ(kleene_wand(f, zero(FinObj(3), FinObj(2))), zero(FinObj(3), FinObj(2)));
}

TEST(Wand, OverlapIsAPreconditionError) {
  try {
    kleene_wand(pm(2, 2, {1, U}), pm(2, 1, {0, U}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
  }
}

TEST(Wand, MinimalWandIsTheGuard) {
  const PartialMap g = pm(3, 1, {U, U, 0});
  EXPECT_EQ(minimal_wand(zero(FinObj(3), FinObj(3)), g), g);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(pm(3, 3, {0, 1, U})), pm(3, 3, {U, U, 2}));
  EXPECT_EQ(complement(identity(FinObj(3))), zero(FinObj(3), FinObj(3)));
  EXPECT_EQ(complement(zero(FinObj(3), FinObj(3))), identity(FinObj(3)));
  EXPECT_THROW(complement(pm(2, 2, {1, U})), PreconditionError);
}

TEST(RelativeComplement, Examples) {
  const PartialMap g = pm(3, 3, {1, U, 0});
  EXPECT_EQ(relative_complement(pm(3, 3, {1, U, U}), g), pm(3, 3, {U, U, 0}));
  EXPECT_EQ(relative_complement(g, g), zero(FinObj(3), FinObj(3)));
  EXPECT_EQ(relative_complement(zero(FinObj(3), FinObj(3)), g), g);
  EXPECT_THROW(relative_complement(pm(3, 3, {2, U, U}), g), PreconditionError);
}

TEST(UpperStar, Examples) {
  EXPECT_EQ(upper_star(pm(3, 3, {1, 2, U})), pm(3, 3, {2, 2, 2}));
  EXPECT_EQ(upper_star(identity(FinObj(3))), zero(FinObj(3), FinObj(3)));
  EXPECT_EQ(upper_star(zero(FinObj(3), FinObj(3))), identity(FinObj(3)));
}

TEST(UpperStar, RoundTripsWithTheWand) {
  Rng r(31);
  const StarFn star = upper_star;
  const WandFn wand = [](const PartialMap& f, const PartialMap& g) { return kleene_wand(f, g); };
  for (int i = 0; i < 100; ++i) {
    const FinObj x = gen_obj(r, 6), a = gen_obj(r, 4);
    auto [f, g] = gen_disjoint_pair(r, x, a);
    ASSERT_EQ(star_to_wand(star, f, g), kleene_wand(f, g));
    ASSERT_EQ(wand_to_star(wand, f), upper_star(f));
  }
}

// The loop reading: the wand is step simulation with a visited set, at every point.
TEST(Property, WandEqualsStepSimulation) {
  Rng r(32);
  for (int i = 0; i < 3000; ++i) {
    const FinObj x = gen_obj(r, 7), a = gen_obj(r, 4);
    auto [f, g] = gen_disjoint_pair(r, x, a);
    const PartialMap w = kleene_wand(f, g);
    for (int p = 0; p < x.size(); ++p) ASSERT_EQ(w(p), step_simulate(f, g, p)) << to_string(f) << " " << to_string(g);
  }
}

TEST(StepSimulate, Examples) {
  EXPECT_EQ(step_simulate(pm(3, 3, {1, 2, U}), pm(3, 1, {U, U, 0}), 0), std::optional<int>(0));
  EXPECT_EQ(step_simulate(pm(3, 3, {1, 0, U}), pm(3, 1, {U, U, 0}), 0), std::nullopt);
  EXPECT_EQ(step_simulate(pm(3, 3, {1, U, U}), pm(3, 2, {U, 1, U}), 1), std::optional<int>(1));
}

TEST(Enumerate, SmallestCase) {
  const auto pairs = enumerate_all(1, 1);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(disjoint_pair_count(1, 1), 3u);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& [f, g] : pairs) seen.insert({f.table(), g.table()});
  EXPECT_TRUE(seen.count({{U}, {U}}));
  EXPECT_TRUE(seen.count({{U}, {0}}));
  EXPECT_TRUE(seen.count({{0}, {U}}));
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (int x = 0; x <= kEnumMaxX; ++x) {
    for (int a = 0; a <= kEnumMaxA; ++a) {
      std::size_t brute = 0;
      for (const auto& f : all_maps(FinObj(x), FinObj(x))) {
        for (const auto& g : all_maps(FinObj(x), FinObj(a))) brute += (f.support() & g.support()) == 0 ? 1 : 0;
      }
      const auto pairs = enumerate_all(x, a);
      EXPECT_EQ(pairs.size(), brute);
      EXPECT_EQ(disjoint_pair_count(x, a), brute);
      std::set<std::pair<std::vector<int>, std::vector<int>>> uniq;
      for (const auto& [f, g] : pairs) uniq.insert({f.table(), g.table()});
      EXPECT_EQ(uniq.size(), pairs.size());
    }
  }
  EXPECT_EQ(disjoint_pair_count(3, 2), 216u);
  EXPECT_THROW(enumerate_all(4, 2), CapacityError);
  EXPECT_THROW(enumerate_all(3, 3), CapacityError);
}

TEST(Generators, Deterministic) {
  Rng a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const FinObj x = gen_obj(a, 6);
    ASSERT_EQ(x.size(), gen_obj(b, 6).size());
    ASSERT_EQ(gen_partial_map(a, x, x), gen_partial_map(b, x, x));
    ASSERT_EQ(gen_disjoint_pair(a, x, FinObj(2)), gen_disjoint_pair(b, x, FinObj(2)));
  }
}

TEST(Generators, DensityZeroIsZeroAndOneIsTotal) {
  Rng r(5);
  for (int i = 0; i < 50; ++i) {
    const FinObj x = gen_obj(r, 6, 1);
    EXPECT_TRUE(gen_partial_map(r, x, x, 0.0).is_zero());
    EXPECT_TRUE(gen_partial_map(r, x, x, 1.0).is_total());
  }
}

TEST(Generators, DisjointByConstruction) {
  Rng r(6);
  for (int i = 0; i < 500; ++i) {
    const FinObj x = gen_obj(r, 6);
    auto [f, g] = gen_disjoint_pair(r, x, gen_obj(r, 3));
    ASSERT_EQ(f.support() & g.support(), 0u);
    const auto fam = gen_disjoint_family(r, x, x, 4);
    for (std::size_t p = 0; p < fam.size(); ++p) {
      for (std::size_t q = p + 1; q < fam.size(); ++q) ASSERT_EQ(fam[p].support() & fam[q].support(), 0u);
    }
  }
}

// First outputs of the generator for seed 0, pinned so other implementations of the
// documented algorithm can compare against them.
TEST(Generators, SplitMixReferenceValues) {
  Rng r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}
