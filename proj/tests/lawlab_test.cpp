#include <set>

#include <gtest/gtest.h>

#include "iterlab/lawlab.hpp"

using namespace iterlab;

TEST(Lawlab, RestrictionLawPasses) {
  const LawReport rep = run_law("R.1", 1, 500, SizeBounds{});
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.cases, 500u);
  EXPECT_TRUE(rep.counterexample.is_null());
}

TEST(Lawlab, WandOracleExhaustive) {
  SizeBounds b;
  b.max_size = 3;
  const LawReport rep = run_exhaustive(find_law("⩚.oracle"), b);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.mode, Mode::exhaustive);
  EXPECT_GE(rep.cases, 216u);
}

TEST(Lawlab, ConstantWandIsCaught) {
  const LawReport rep = run_law("⩚.1", 3, 300, SizeBounds{}, Hooks::constant_wand());
  ASSERT_FALSE(rep.passed);
  ASSERT_TRUE(rep.failing_case.has_value());
  EXPECT_FALSE(rep.counterexample.is_null());
  EXPECT_EQ(rep.hooks, "constant-wand");
}

TEST(Lawlab, DroppedFeedbackIsCaught) {
  EXPECT_FALSE(run_law("Trace.Vanishing", 3, 300, SizeBounds{}, Hooks::dropped_feedback()).passed);
  EXPECT_FALSE(run_law("Yanking", 3, 300, SizeBounds{}, Hooks::dropped_feedback()).passed);
}

TEST(Lawlab, SerialAndParallelAgree) {
  for (const char* id : {"wand.2", "Trace.Sliding", "⊔.3"}) {
    const LawReport p = run_law(id, 11, 400, SizeBounds{}, Hooks::canonical(), Exec::parallel);
    const LawReport s = run_law(id, 11, 400, SizeBounds{}, Hooks::canonical(), Exec::serial);
    EXPECT_EQ(p.passed, s.passed) << id;
    EXPECT_EQ(p.vacuous, s.vacuous) << id;
  }
  const LawReport p = run_law("wand.1", 5, 400, SizeBounds{}, Hooks::constant_wand(), Exec::parallel);
  const LawReport s = run_law("wand.1", 5, 400, SizeBounds{}, Hooks::constant_wand(), Exec::serial);
  EXPECT_EQ(p.failing_case, s.failing_case);
  EXPECT_EQ(p.counterexample, s.counterexample);
}

TEST(Lawlab, ReplayReproducesTheFailure) {
  const LawReport rep = run_law("wand.1", 9, 400, SizeBounds{}, Hooks::constant_wand());
  ASSERT_FALSE(rep.passed);
  const LawReport again = replay(rep, Hooks::constant_wand());
  EXPECT_FALSE(again.passed);
  EXPECT_EQ(again.failing_case, rep.failing_case);
  EXPECT_EQ(again.counterexample, rep.counterexample);
  EXPECT_TRUE(replay(rep, Hooks::canonical()).passed);
}

TEST(Lawlab, SameSeedSameReport) {
  const auto a = run_law("star.1", 4, 300, SizeBounds{}, Hooks::constant_wand());
  const auto b = run_law("star.1", 4, 300, SizeBounds{}, Hooks::constant_wand());
  EXPECT_EQ(a.to_json()["counterexample"], b.to_json()["counterexample"]);
}

TEST(Registry, CoversRequiredLabels) {
  for (const auto& label : required_labels()) EXPECT_NO_THROW(find_law(label)) << label;
}

TEST(Registry, IdsAndAliasesAreUnique) {
  std::set<std::string> seen;
  for (const auto& law : registry()) {
    EXPECT_TRUE(seen.insert(law.id).second) << law.id;
    for (const auto& a : law.aliases) EXPECT_TRUE(seen.insert(a).second) << a;
    EXPECT_FALSE(law.statement.empty()) << law.id;
  }
}

TEST(Registry, UnknownLaw) { EXPECT_THROW(find_law("no.such.law"), UnknownLaw); }

TEST(LawReport, JsonFields) {
  const nlohmann::json j = run_law("wand.1", 2, 200, SizeBounds{}, Hooks::constant_wand()).to_json();
  for (const char* k : {"law", "seed", "cases", "status", "counterexample", "mode", "hooks", "case_index", "case_seed"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["law"], "wand.1");
  const nlohmann::json ok = run_law("R.2", 2, 50, SizeBounds{}).to_json();
  EXPECT_EQ(ok["status"], "pass");
  EXPECT_TRUE(ok["counterexample"].is_null());
}
