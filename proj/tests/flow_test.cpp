#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "iterlab/flow.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/oracle.hpp"

using namespace iterlab;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = ITERLAB_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> goldens() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kGolden))
    if (e.path().extension() == ".flow") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string run_text(const std::string& src) {
  std::string out;
  for (const auto& r : flow::Evaluator(flow::parse(src)).run()) out += r.output + "\n";
  return out;
}

const char* kLoop = R"(set X {s0 s1 s2}
set A {done}
map f : X->X {s0->s1 s1->s2}
map g : X->A {s2->done}
let loop = until g do f
eval loop at s0
)";

}  // namespace

TEST(Golden, OutputsMatch) {
  int checked = 0;
  for (const auto& p : goldens()) {
    const fs::path out = fs::path(p).replace_extension(".out");
    if (!fs::exists(out)) continue;
    EXPECT_EQ(run_text(slurp(p)), slurp(out)) << p;
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(Golden, ParsePrintRoundTrip) {
  for (const auto& p : goldens()) {
    if (!fs::exists(fs::path(p).replace_extension(".out"))) continue;
    const flow::Program prog = flow::parse(slurp(p));
    const std::string text = flow::print(prog);
    const flow::Program again = flow::parse(text);
    EXPECT_TRUE(flow::same_program(prog, again)) << p;
    EXPECT_EQ(flow::print(again), text) << p;
  }
}

TEST(Parse, WorkedExampleCounts) {
  const flow::Program p = flow::parse(kLoop);
  EXPECT_EQ(p.count_sets(), 2u);
  EXPECT_EQ(p.count_maps(), 2u);
  EXPECT_EQ(p.count_lets(), 1u);
  EXPECT_EQ(p.count_directives(), 1u);
  EXPECT_EQ(run_text(kLoop), "done\n");
}

TEST(Parse, CyclicLoopIsUndefined) {
  const std::string src = R"(set X {s0 s1}
set A {done}
map f : X->X {s0->s1 s1->s0}
map g : X->A {}
let w = until g do f
eval w at s0
)";
  EXPECT_EQ(run_text(src), "undefined\n");
}

TEST(Parse, UnbalancedBraceReportsPosition) {
  try {
    flow::parse("set X {a b}\nmap f : X->X {a->b\neval f at a\n");
    FAIL() << "expected a parse error";
  } catch (const flow::ParseError& e) {
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_EQ(e.pos().col, 1);
  }
}

TEST(Parse, UnknownNames) {
  EXPECT_THROW(flow::parse("set X {a}\nmap f : X->Y {}\n"), flow::ParseError);
  EXPECT_THROW(flow::parse("set X {a}\nlet h = k\n"), flow::ParseError);
  EXPECT_THROW(flow::parse("set X {a}\nset X {b}\n"), flow::ParseError);
  EXPECT_THROW(flow::parse("set X {a}\nmap f : X->X {a->z}\n"), flow::ParseError);
}

TEST(Typing, BodyMustBeEndomorphism) {
  const std::string src = "set X {a}\nset Y {b}\nmap f : X->Y {a->b}\nmap g : X->Y {}\nlet w = until g do f\n";
  try {
    flow::Evaluator ev(flow::parse(src));
    FAIL() << "expected a semantic error";
  } catch (const flow::SemanticError& e) {
    EXPECT_EQ(e.pos().line, 5);
    EXPECT_NE(e.message().find("endomorphism"), std::string::npos);
  }
}

TEST(Runtime, OverlapNamesThePoint) {
  EXPECT_EQ(run_text("set X {a b}\nmap f : X->X {a->b}\nmap g : X->X {b->a}\ncheck f disjoint g\n"), "disjoint\n");
  EXPECT_EQ(run_text("set X {a b}\nmap f : X->X {a->b}\nmap g : X->X {a->a}\ncheck f disjoint g\n"), "overlap at a\n");
  EXPECT_THROW(run_text("set X {a b}\nmap f : X->X {a->b}\nmap g : X->X {a->a}\nlet h = f | g\neval h at a\n"),
               flow::SemanticError);
}

// Until agrees with the step-by-step simulation on random programs.
TEST(Property, UntilMatchesSimulation) {
  Rng r(81);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(r.below(5));
    const auto [f, g] = gen_disjoint_pair(r, FinObj(n), FinObj(2));
    std::string src = "set X {";
    for (int x = 0; x < n; ++x) src += (x ? " s" : "s") + std::to_string(x);
    src += "}\nset A {p q}\nmap f : X->X {";
    for (int x = 0; x < n; ++x)
      if (auto y = f(x)) src += " s" + std::to_string(x) + "->s" + std::to_string(*y);
    src += "}\nmap g : X->A {";
    for (int x = 0; x < n; ++x)
      if (auto y = g(x)) src += " s" + std::to_string(x) + (*y ? "->q" : "->p");
    src += "}\nlet w = until g do f\n";
    for (int x = 0; x < n; ++x) src += "eval w at s" + std::to_string(x) + "\n";
    const auto results = flow::Evaluator(flow::parse(src)).run();
    const PartialMap expect = step_simulate_map(f, g);
    for (int x = 0; x < n; ++x) {
      const auto y = expect(x);
      ASSERT_EQ(results[x].output, y ? (*y ? "q" : "p") : "undefined") << src;
    }
  }
}
