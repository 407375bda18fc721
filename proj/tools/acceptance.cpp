// Acceptance runner: one pass/fail line per criterion.
//   acceptance            run all criteria
//   acceptance 4 9        run the listed criteria
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iterlab/flow.hpp"
#include "iterlab/interference.hpp"
#include "iterlab/lawlab.hpp"

using namespace iterlab;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  std::size_t cases = 0;
  std::size_t vacuous = 0;

  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

void absorb(Outcome& o, const LawReport& rep) {
  o.cases += rep.cases;
  o.vacuous += rep.vacuous;
  if (!rep.passed) {
    std::ostringstream ss;
    ss << rep.law << (rep.mode == Mode::exhaustive ? " (exhaustive)" : "") << " failed at case "
       << rep.failing_case.value_or(0) << ": " << rep.counterexample.dump();
    o.fail(ss.str());
  }
}

void sampled(Outcome& o, const std::vector<std::string>& ids, std::size_t cases, const SizeBounds& b) {
  for (const auto& id : ids) absorb(o, run_law(id, kSeed, cases, b));
}

void exhaustive(Outcome& o, const std::vector<std::string>& ids) {
  SizeBounds b;
  b.max_size = 3;
  for (const auto& id : ids) absorb(o, run_exhaustive(find_law(id), b));
}

SizeBounds sized(int max_size) {
  SizeBounds b;
  b.max_size = max_size;
  return b;
}

void c1(Outcome& o) {
  const std::vector<std::string> ids{"R.1", "R.2", "R.3", "R.4"};
  exhaustive(o, ids);
  sampled(o, ids, 1000, sized(8));
}

void c2(Outcome& o) {
  sampled(o,
          {"perp.0", "perp.1", "perp.2", "perp.3", "perp.4", "perp.5", "perp.consequences", "perp.bounds", "Operp.0",
           "Operp.1", "Operp.2", "Operp.3", "Operp.4", "Operp.collapse"},
          1000, sized(6));
  for (const auto& rel : {InterferenceRel::maximal(), InterferenceRel::minimal()}) {
    const ValidationReport rep = validate_interference(rel, 6);
    if (!rep.ok) o.fail("validate_interference rejected a canonical relation: " + rep.axiom);
  }
}

void c3(Outcome& o) {
  SizeBounds b = sized(6);
  b.max_family = 4;
  sampled(o, {"join.1", "join.2", "join.3", "join.4", "join.consequences", "join.strong-search"}, 1000, b);
}

void c4(Outcome& o) {
  exhaustive(o, {"wand.oracle"});
  o.note("exhaustive |X|=3, |A|=2: " + std::to_string(o.cases) + " disjoint pairs");
  sampled(o, {"wand.oracle"}, 5000, sized(6));
}

void c5(Outcome& o) {
  sampled(o,
          {"wand.1", "wand.2", "wand.3", "wand.4", "alt-wand.1", "alt-wand.2", "alt-wand.3", "wand.restricted-guard",
           "wand.zero-body", "wand.zero-guard", "wand.split-guard", "wand.total-body", "wand.total-guard",
           "wand.unrolling", "wand.uniform", "wand.lax", "wand.colax", "wand.minimal-relation"},
          1000, sized(5));
}

void c6(Outcome& o) {
  const std::vector<std::string> ids{"relcomp.1", "relcomp.2", "complement", "star.1", "star.2", "star.3",
                                     "star.formula", "star.roundtrip-wand", "star.roundtrip-star"};
  exhaustive(o, ids);
  sampled(o, ids, 1000, sized(6));
}

void c7(Outcome& o) {
  SizeBounds b = sized(4);
  b.max_gens = 3;
  sampled(o, {"dj.R", "dj.perp", "dj.join", "dj.embed", "dj.canonicity", "dj.wand"}, 300, b);
}

SizeBounds matrix_bounds() {
  SizeBounds b = sized(4);
  b.max_parts = 3;
  return b;
}

void c8(Outcome& o) {
  sampled(o,
          {"mat.R", "mat.compose-flat", "decision.D", "decision.d", "decision.idempotent",
           "decision.restriction-inverse", "decision.separating", "decision.separation-iso",
           "decision.n-ary-separation", "mat.perp-d-entrywise", "mat.join-decision"},
          300, matrix_bounds());
}

void c9(Outcome& o) {
  sampled(o,
          {"Trace.Tightening", "Trace.Sliding", "Trace.Vanishing", "Trace.Superposing", "Trace.Yanking",
           "Trace.Uniform", "Trace.ClosedForm", "Trace.CopairingForm", "Trace.Oracle", "Iter.Iteration",
           "Iter.Naturality", "Iter.Dinaturality", "Iter.Diagonal", "Iter.Uniform", "Iter.WandRoundTrip",
           "Iter.TraceRoundTrip"},
          300, matrix_bounds());
}

// Both laws must fail under the constant wand. The dropped-feedback trace is reported
// alongside but does not count towards the verdict.
void c10(Outcome& o) {
  const Hooks bad = Hooks::constant_wand();
  for (const char* id : {"wand.1", "Trace.Yanking"}) {
    const LawReport rep = run_law(id, kSeed, 1000, sized(6), bad);
    o.cases += rep.cases;
    if (rep.passed) {
      o.fail(std::string(id) + " still passes under " + bad.name + " (" + std::to_string(rep.cases) + " cases)");
    } else {
      o.note(std::string(id) + " fails under " + bad.name + " at case " + std::to_string(*rep.failing_case) + ": " +
             rep.counterexample.dump());
    }
  }
  const LawReport fb = run_law("Trace.Yanking", kSeed, 1000, sized(6), Hooks::dropped_feedback());
  o.note(std::string("for comparison, Trace.Yanking under dropped-feedback: ") +
         (fb.passed ? "passes" : "fails at case " + std::to_string(*fb.failing_case)));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c11(Outcome& o) {
  const fs::path dir = ITERLAB_GOLDEN_DIR;
  std::vector<fs::path> programs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".flow" && fs::exists(fs::path(e.path()).replace_extension(".out")))
      programs.push_back(e.path());
  std::sort(programs.begin(), programs.end());
  if (programs.size() < 6) o.fail("only " + std::to_string(programs.size()) + " golden programs with expected output");
  for (const char* needed : {"loop", "cyclic", "star", "join"})
    if (!fs::exists(dir / (std::string(needed) + ".flow"))) o.fail(std::string("missing golden ") + needed);
  for (const auto& p : programs) {
    ++o.cases;
    try {
      const flow::Program prog = flow::parse(slurp(p));
      std::string out;
      for (const auto& r : flow::Evaluator(prog).run()) out += r.output + "\n";
      if (out != slurp(fs::path(p).replace_extension(".out"))) o.fail(p.filename().string() + ": output differs");
      const std::string text = flow::print(prog);
      const flow::Program again = flow::parse(text);
      if (!flow::same_program(prog, again) || flow::print(again) != text)
        o.fail(p.filename().string() + ": parse/print round trip differs");
    } catch (const Error& e) {
      o.fail(p.filename().string() + ": " + e.what());
    }
  }
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "restriction axioms", 10, c1},
      {2, "interference axioms", 10, c2},
      {3, "join laws and strongness", 10, c3},
      {4, "wand oracle equivalence", 30, c4},
      {5, "wand axioms", 60, c5},
      {6, "classical and star laws", 20, c6},
      {7, "DJ completion", 30, c7},
      {8, "matrices and decisions", 60, c8},
      {9, "trace and iteration suite", 120, c9},
      {10, "mutation sensitivity (constant wand)", 10, c10},
      {11, "flow golden files", 5, c11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.number) == wanted.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.fail("took longer than the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit");
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << std::setw(2) << c.number << " " << (o.ok ? "PASS" : "FAIL") << "  " << c.title
              << "  cases=" << o.cases;
    if (o.vacuous) std::cout << " vacuous=" << o.vacuous;
    std::cout << std::fixed << std::setprecision(2) << " time=" << secs << "s/" << c.limit_s << "s\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all_ok ? 0 : 1;
}
