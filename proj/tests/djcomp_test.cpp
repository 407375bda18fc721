#include <gtest/gtest.h>

#include "iterlab/djcomp.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/wand.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

namespace {

const FinObj X3(3);

DjMap dj(std::vector<PartialMap> gens) { return DjMap(X3, X3, std::move(gens)); }

}  // namespace

TEST(DjCompose, Examples) {
  EXPECT_EQ(dj_compose(dj({pm(3, 3, {1, U, U})}), dj({pm(3, 3, {U, 2, U})})), dj({pm(3, 3, {2, U, U})}));
  const DjMap s = dj({pm(3, 3, {1, U, U}), pm(3, 3, {U, U, 0})});
  EXPECT_EQ(dj_compose(s, DjMap::identity(X3)), s);
  EXPECT_TRUE(dj_compose(s, DjMap::zero(X3, X3)).is_zero());
}

TEST(DjRestriction, Elementwise) {
  const DjMap s = dj({pm(3, 3, {1, U, U}), pm(3, 3, {U, U, 0})});
  EXPECT_EQ(dj_restriction(s), dj({pm(3, 3, {0, U, U}), pm(3, 3, {U, U, 2})}));
}

TEST(DjLeq, SplitGeneratorIsStrictlyBelow) {
  const PartialMap f = pm(3, 3, {1, U, 0});
  const PartialMap g1 = pm(3, 3, {1, U, U}), g2 = pm(3, 3, {U, U, 0});
  const DjMap whole = dj({f}), split = dj({g1, g2});
  EXPECT_NE(whole, split);
  EXPECT_TRUE(dj_leq(split, whole));
  EXPECT_FALSE(dj_leq(whole, split));
  EXPECT_EQ(dj_flatten(split), dj_flatten(whole));
}

TEST(DjJoin, IsUnionOfGenerators) {
  const PartialMap f = pm(3, 3, {1, U, U}), g = pm(3, 3, {U, U, 0});
  EXPECT_EQ(dj_join(dj({f}), dj({g})), dj({f, g}));
  EXPECT_TRUE(dj_perp(dj({f}), dj({g})));
  EXPECT_FALSE(dj_perp(dj({f}), dj({pm(3, 3, {2, U, U})})));
}

TEST(DjEmbed, ZeroHasNoGenerators) {
  EXPECT_TRUE(dj_embed(zero(X3, X3)).is_zero());
  EXPECT_EQ(dj_embed(identity(X3)), DjMap::identity(X3));
}

TEST(DjMap, RejectsBadGeneratorSets) {
  EXPECT_THROW(dj({zero(X3, X3)}), PreconditionError);
  EXPECT_THROW(dj({pm(3, 3, {1, U, U}), pm(3, 3, {2, U, U})}), PreconditionError);
  EXPECT_THROW(dj({pm(3, 3, {1, U, U}), pm(3, 3, {1, U, U})}), PreconditionError);
  EXPECT_THROW(DjMap(X3, FinObj(2), {pm(3, 3, {1, U, U})}), ShapeError);
}

TEST(DjMap, GeneratorOrderDoesNotMatter) {
  const PartialMap f = pm(3, 3, {1, U, U}), g = pm(3, 3, {U, U, 0});
  EXPECT_EQ(dj({f, g}), dj({g, f}));
}

TEST(DjWand, ThreeStateLoop) {
  const DjMap f = DjMap(X3, X3, {pm(3, 3, {1, U, U}), pm(3, 3, {U, 2, U})});
  const DjMap g = DjMap(X3, FinObj(1), {pm(3, 1, {U, U, 0})});
  const DjMap w = dj_wand(f, g);
  EXPECT_EQ(dj_flatten(w), pm(3, 1, {0, 0, 0}));
  // Each path through the split body stays a separate generator.
  EXPECT_EQ(w.gens().size(), 3u);
}

TEST(Property, EmbedIsAFaithfulRestrictionFunctor) {
  Rng r(41);
  for (int i = 0; i < 500; ++i) {
    const FinObj a = gen_obj(r, 4), b = gen_obj(r, 4), c = gen_obj(r, 4);
    const PartialMap f = gen_partial_map(r, a, b), g = gen_partial_map(r, b, c), f2 = gen_partial_map(r, a, b);
    ASSERT_EQ(dj_embed(compose(f, g)), dj_compose(dj_embed(f), dj_embed(g)));
    ASSERT_EQ(dj_embed(restriction(f)), dj_restriction(dj_embed(f)));
    ASSERT_EQ(dj_embed(f) == dj_embed(f2), f == f2);
    ASSERT_EQ(dj_flatten(dj_embed(f)), f);
  }
}

// Joins are added freely: the embedding of a join is not the join of the embeddings
// once both parts are nonzero.
TEST(Property, EmbedDoesNotPreserveJoins) {
  const PartialMap f = pm(3, 3, {1, U, U}), g = pm(3, 3, {U, U, 0});
  EXPECT_NE(dj_embed(join(f, g)), dj_join(dj_embed(f), dj_embed(g)));
  EXPECT_TRUE(dj_leq(dj_join(dj_embed(f), dj_embed(g)), dj_embed(join(f, g))));
}
