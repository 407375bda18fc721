#include <gtest/gtest.h>

#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/interference.hpp"
#include "iterlab/wand.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

using Mask = InterferenceRel::Mask;

TEST(Perp, MaximalAndMinimal) {
  const PartialMap f = pm(3, 3, {1, U, U}), g = pm(3, 3, {U, U, 0});
  EXPECT_TRUE(perp(InterferenceRel::maximal(), f, g));
  EXPECT_FALSE(perp(InterferenceRel::minimal(), f, g));
  for (const auto& rel : {InterferenceRel::maximal(), InterferenceRel::minimal()}) {
    EXPECT_TRUE(perp(rel, identity(FinObj(3)), zero(FinObj(3), FinObj(2))));
  }
}

TEST(Validate, MaximalAndMinimalPass) {
  EXPECT_TRUE(validate_interference(InterferenceRel::maximal(), 4).ok);
  EXPECT_TRUE(validate_interference(InterferenceRel::minimal(), 4).ok);
}

TEST(Validate, SelfRelatedIdempotentFailsAntiReflexivity) {
  // Everything related to zero, plus ({0}, {0}).
  InterferenceRel::PairList pairs;
  for (Mask m = 0; m < 4; ++m) pairs.push_back({0, m});
  pairs.push_back({1, 1});
  const auto rep = validate_interference(InterferenceRel::custom({{2, pairs}}), 2);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "O-perp.2");
  EXPECT_NE(rep.witness.find("{0}"), std::string::npos) << rep.witness;
}

TEST(Validate, MissingDownwardPairFailsDownwardClosure) {
  // {0,1} ~ {2} on X3 but {0} ~ {2} is missing.
  InterferenceRel::PairList pairs;
  for (Mask m = 0; m < 8; ++m) pairs.push_back({0, m});
  pairs.push_back({3, 4});
  pairs.push_back({2, 4});
  const auto rep = validate_interference(InterferenceRel::custom({{3, pairs}}), 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "O-perp.3");
}

TEST(Validate, BoundAboveCapacity) {
  EXPECT_THROW(validate_interference(InterferenceRel::maximal(), 13), CapacityError);
}

TEST(Validate, UnvalidatedCustomRelationCannotBeUsed) {
  const auto rel = InterferenceRel::custom({{1, {{0, 0}, {0, 1}}}});
  EXPECT_THROW(perp(rel, pm(1, 1, {U}), pm(1, 1, {0})), PreconditionError);
  EXPECT_TRUE(perp(rel.validated(1), pm(1, 1, {U}), pm(1, 1, {0})));
}

namespace {

// The restrictional axioms read literally: pre-composition closure is checked against
// every map h: Y -> X on the listed sizes, not through the preimage-pattern shortcut.
bool literal_valid(const InterferenceRel& rel, const std::vector<int>& sizes) {
  for (int n : sizes) {
    const Mask full = (Mask{1} << n) - 1;
    if (!rel.relates(n, full, 0)) return false;
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = 0; b <= full; ++b) {
        if (!rel.relates(n, a, b)) continue;
        if (!rel.relates(n, b, a)) return false;
        if (a == b && a != 0) return false;
        for (Mask a2 = 0; a2 <= full; ++a2) {
          for (Mask b2 = 0; b2 <= full; ++b2) {
            if ((a2 & ~a) == 0 && (b2 & ~b) == 0 && !rel.relates(n, a2, b2)) return false;
          }
        }
        for (int m : sizes) {
          for (const PartialMap& h : all_maps(FinObj(m), FinObj(n))) {
            Mask pa = 0, pb = 0;
            for (int y = 0; y < m; ++y) {
              if (auto x = h(y)) {
                if ((a >> *x) & 1U) pa |= Mask{1} << y;
                if ((b >> *x) & 1U) pb |= Mask{1} << y;
              }
            }
            if (!rel.relates(m, pa, pb)) return false;
          }
        }
      }
    }
  }
  return true;
}

// Perturbs the minimal or maximal relation on sizes 0..3 by toggling a few pairs.
InterferenceRel perturbed(Rng& r) {
  const bool from_max = r.coin();
  std::map<int, InterferenceRel::PairList> by_size;
  for (int n = 0; n <= 3; ++n) {
    const Mask full = (Mask{1} << n) - 1;
    std::set<std::pair<Mask, Mask>> s;
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = a; b <= full; ++b) {
        if (from_max ? (a & b) == 0 : (a == 0 || b == 0)) s.insert({a, b});
      }
    }
    const int flips = r.below_int(3);
    for (int k = 0; k < flips; ++k) {
      Mask a = static_cast<Mask>(r.below(full + 1)), b = static_cast<Mask>(r.below(full + 1));
      if (a > b) std::swap(a, b);
      if (!s.erase({a, b})) s.insert({a, b});
    }
    by_size[n] = InterferenceRel::PairList(s.begin(), s.end());
  }
  return InterferenceRel::custom(by_size);
}

}  // namespace

TEST(Validate, AgreesWithLiteralOracle) {
  Rng r(21);
  int passed = 0, failed = 0;
  for (int i = 0; i < 400; ++i) {
    const InterferenceRel rel = perturbed(r);
    const bool expect = literal_valid(rel, {0, 1, 2, 3});
    ASSERT_EQ(validate_interference(rel, 3).ok, expect) << "case " << i;
    (expect ? passed : failed)++;
  }
  EXPECT_GT(passed, 0);
  EXPECT_GT(failed, 0);
}

TEST(Join, Examples) {
  EXPECT_EQ(join(pm(3, 3, {1, U, U}), pm(3, 3, {U, U, 0})), pm(3, 3, {1, U, 0}));
  const PartialMap f = pm(3, 3, {1, U, 0});
  EXPECT_EQ(join(f, zero(FinObj(3), FinObj(3))), f);
  EXPECT_EQ(join(InterferenceRel::maximal(), std::vector<PartialMap>{}, FinObj(3), FinObj(2)),
            zero(FinObj(3), FinObj(2)));
}

TEST(Join, OverlapNamesTheClash) {
  try {
    join(pm(3, 3, {1, U, U}), pm(3, 3, {2, U, U}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
  }
}

// Any join under the maximal relation is strong; under the minimal relation {f, 0} is.
TEST(Strong, MaximalAndMinimalJoinsAreStrong) {
  Rng r(22);
  for (int i = 0; i < 300; ++i) {
    const FinObj a = gen_obj(r, 5), b = gen_obj(r, 4);
    const auto fam = gen_disjoint_family(r, a, b, 3);
    const PartialMap outside = complement(restriction(join(InterferenceRel::maximal(), fam, a, b)));
    const PartialMap h = compose(outside, gen_partial_map(r, a, b));
    ASSERT_TRUE(is_strong_join(InterferenceRel::maximal(), fam, h, a, b));
  }
  const PartialMap f = pm(3, 3, {1, U, 0});
  const std::vector<PartialMap> fam{f, zero(FinObj(3), FinObj(3))};
  EXPECT_TRUE(is_strong_join(InterferenceRel::minimal(), fam, zero(FinObj(3), FinObj(3)), FinObj(3), FinObj(3)));
  EXPECT_FALSE(find_non_strong_join(InterferenceRel::maximal(), 3, 4).has_value());
  EXPECT_FALSE(find_non_strong_join(InterferenceRel::minimal(), 3, 4).has_value());
}

// {0}, {1}, {2} pairwise related on X3 but {0,1} not related to {2}: a non-strong join,
// and the relation is not closed under pre-composition.
TEST(Strong, NonStrongCustomRelationOnThreePoints) {
  InterferenceRel::PairList pairs;
  for (Mask m = 0; m < 8; ++m) pairs.push_back({0, m});
  pairs.insert(pairs.end(), {{1, 2}, {1, 4}, {2, 4}});
  const auto rel = InterferenceRel::custom({{3, pairs}});
  const auto w = find_non_strong_join(rel, 3, 2);
  ASSERT_TRUE(w.has_value());
  Mask joined = 0;
  for (Mask m : w->family) joined |= m;
  EXPECT_FALSE(rel.relates(3, joined, w->h));
  for (Mask m : w->family) EXPECT_TRUE(rel.relates(3, m, w->h));
  const auto rep = validate_interference(rel, 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "O-perp.4");
}
