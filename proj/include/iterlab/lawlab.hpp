#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "iterlab/djcomp.hpp"
#include "iterlab/finpar.hpp"
#include "iterlab/matext.hpp"
#include "iterlab/rng.hpp"
#include "iterlab/trace.hpp"
#include "iterlab/wand.hpp"

namespace iterlab {

struct SizeBounds {
  int max_size = 6;    // carrier size
  int max_parts = 3;   // parts per matrix object
  int max_family = 4;  // members of a joined family
  int max_gens = 3;    // generators of a DJ map
};

// Operators under test. Laws call the wand and trace through here so a deliberately
// wrong variant can be swapped in.
struct Hooks {
  std::string name = "canonical";
  WandFn wand;
  TraceFn<ParBase> trace;  // empty: trace_n with `wand`

  PartialMap w(const PartialMap& f, const PartialMap& g) const;
  Matrix tr(const Matrix& g, std::size_t cut) const;
  Matrix iter(const Matrix& f) const;
  PartialMap star(const PartialMap& f) const;

  static Hooks canonical();
  // f wand g := g.
  static Hooks constant_wand();
  // Tr G := G4, dropping the feedback path.
  static Hooks dropped_feedback();
};

// Records the inputs of one case and the first failed check.
class Verdict {
 public:
  using Value = std::variant<PartialMap, Matrix, DjMap, std::int64_t, std::string, std::vector<PartialMap>>;

  void input(std::string name, Value v) { inputs_.emplace_back(std::move(name), std::move(v)); }

  bool check(std::string_view what, bool ok);
  template <class T>
  bool equal(std::string_view what, const T& lhs, const T& rhs) {
    if (lhs == rhs) return true;
    if (!failed_) {
      lhs_ = Value(lhs);
      rhs_ = Value(rhs);
    }
    return check(what, false);
  }
  // Hypothesis did not hold; the case passes without exercising the conclusion.
  void vacuous() { vacuous_ = true; }
  void error(std::string_view what);

  bool failed() const { return failed_; }
  bool is_vacuous() const { return vacuous_; }
  nlohmann::json counterexample() const;

 private:
  std::vector<std::pair<std::string, Value>> inputs_;
  bool failed_ = false;
  bool vacuous_ = false;
  std::string what_;
  std::optional<Value> lhs_, rhs_;
};

using CaseFn = std::function<void(Rng&, const SizeBounds&, const Hooks&, Verdict&)>;

struct ExhaustivePlan {
  std::size_t count = 0;
  std::function<void(std::size_t, const Hooks&, Verdict&)> check;
  std::string description;
};

struct Law {
  std::string id;
  std::vector<std::string> aliases;
  std::string statement;
  CaseFn sample;
  std::function<ExhaustivePlan(const SizeBounds&)> exhaustive = {};  // may be empty
};

enum class Mode { sampled, exhaustive };
enum class Exec { parallel, serial };

struct LawReport {
  std::string law;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t vacuous = 0;
  bool passed = true;
  Mode mode = Mode::sampled;
  std::string hooks = "canonical";
  SizeBounds bounds;
  std::optional<std::size_t> failing_case;
  nlohmann::json counterexample;  // null on pass
  double seconds = 0.0;

  nlohmann::json to_json() const;
};

class UnknownLaw : public Error {
 public:
  using Error::Error;
};

const std::vector<Law>& registry();
// By id or alias; throws UnknownLaw.
const Law& find_law(std::string_view id);

// Case i draws from Rng(case_seed(seed, i)), so results do not depend on the worker count.
LawReport run_law(const Law& law, std::uint64_t seed, std::size_t cases, const SizeBounds& bounds,
                  const Hooks& hooks = Hooks::canonical(), Exec exec = Exec::parallel);
LawReport run_law(std::string_view id, std::uint64_t seed, std::size_t cases, const SizeBounds& bounds,
                  const Hooks& hooks = Hooks::canonical(), Exec exec = Exec::parallel);
// Throws PreconditionError if the law has no exhaustive mode.
LawReport run_exhaustive(const Law& law, const SizeBounds& bounds, const Hooks& hooks = Hooks::canonical(),
                         Exec exec = Exec::parallel);

// Re-runs a single case of a report.
LawReport replay(const LawReport& report, const Hooks& hooks = Hooks::canonical());

// Axiom and theorem labels the registry must cover.
const std::vector<std::string>& required_labels();

}  // namespace iterlab
