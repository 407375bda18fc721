#include <gtest/gtest.h>

#include "iterlab/errors.hpp"
#include "iterlab/finpar.hpp"
#include "iterlab/gen.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

TEST(Compose, PointwiseExample) {
  const PartialMap f = pm(3, 3, {1, U, 0});
  const PartialMap g = pm(3, 3, {U, 2, U});
  EXPECT_EQ(compose(f, g), pm(3, 3, {2, U, U}));
}

TEST(Compose, IdentityAndZero) {
  const PartialMap f = pm(3, 3, {1, U, 0});
  EXPECT_EQ(compose(f, identity(FinObj(3))), f);
  EXPECT_EQ(compose(identity(FinObj(3)), f), f);
  EXPECT_EQ(compose(f, zero(FinObj(3), FinObj(2))), zero(FinObj(3), FinObj(2)));
  EXPECT_EQ(compose(zero(FinObj(2), FinObj(3)), f), zero(FinObj(2), FinObj(3)));
}

TEST(Compose, ShapeMismatchNamesBothObjects) {
  try {
    compose(pm(2, 3, {0, 1}), pm(2, 2, {0, 1}));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("X3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("X2"), std::string::npos) << msg;
  }
}

TEST(Restriction, Examples) {
  EXPECT_EQ(restriction(pm(3, 3, {1, U, 0})), pm(3, 3, {0, U, 2}));
  EXPECT_EQ(restriction(zero(FinObj(3), FinObj(2))), zero(FinObj(3), FinObj(3)));
  EXPECT_EQ(restriction(identity(FinObj(4))), identity(FinObj(4)));
}

TEST(Leq, Examples) {
  const PartialMap g = pm(3, 3, {1, U, 0});
  EXPECT_TRUE(leq(zero(FinObj(3), FinObj(3)), g));
  EXPECT_TRUE(leq(pm(3, 3, {1, U, U}), g));
  EXPECT_FALSE(leq(pm(3, 3, {2, U, U}), g));
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_total(identity(FinObj(3))));
  EXPECT_FALSE(is_total(pm(2, 2, {1, U})));
  EXPECT_TRUE(is_rest_idem(pm(3, 3, {0, 1, U})));
  EXPECT_FALSE(is_rest_idem(pm(3, 3, {1, U, U})));
  EXPECT_TRUE(zero(FinObj(3), FinObj(1)).is_zero());
}

TEST(Labels, DuplicateLabelsRejected) { EXPECT_THROW(FinObj(std::vector<std::string>{"a", "a"}), ShapeError); }

TEST(Labels, ToStringUsesLabels) {
  const FinObj x(std::vector<std::string>{"s0", "s1"});
  EXPECT_EQ(to_string(PartialMap(x, x, {1, U})), "{s0->s1}");
  EXPECT_EQ(to_string(pm(3, 3, {1, U, 0})), "{0->1, 2->0}");
}

// The order is checked against its definition restr(f) g = f on random maps.
TEST(Property, LeqMatchesPointwiseInclusion) {
  Rng r(11);
  for (int i = 0; i < 2000; ++i) {
    const FinObj a = gen_obj(r, 5), b = gen_obj(r, 5);
    const PartialMap f = gen_partial_map(r, a, b), g = gen_partial_map(r, a, b);
    bool incl = true;
    for (int x = 0; x < a.size(); ++x) {
      if (f.defined_at(x) && f(x) != g(x)) incl = false;
    }
    ASSERT_EQ(leq(f, g), incl);
  }
}

TEST(Property, PowerIsRepeatedComposition) {
  Rng r(12);
  for (int i = 0; i < 500; ++i) {
    const FinObj a = gen_obj(r, 5);
    const PartialMap f = gen_partial_map(r, a, a);
    PartialMap acc = identity(a);
    for (int n = 0; n < 5; ++n) {
      ASSERT_EQ(power(f, n), acc);
      acc = compose(acc, f);
    }
  }
}
