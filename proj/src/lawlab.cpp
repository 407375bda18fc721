#include "iterlab/lawlab.hpp"

#include <chrono>
#include <exception>

#include "iterlab/json_io.hpp"
#include "laws/laws.hpp"

namespace iterlab {

PartialMap Hooks::w(const PartialMap& f, const PartialMap& g) const { return wand ? wand(f, g) : kleene_wand(f, g); }

Matrix Hooks::tr(const Matrix& g, std::size_t cut) const {
  if (trace) return trace(g, cut);
  return trace_n<ParBase>(g, cut, [this](const PartialMap& f, const PartialMap& h) { return w(f, h); });
}

Matrix Hooks::iter(const Matrix& f) const {
  return iterate<ParBase>(f, [this](const PartialMap& a, const PartialMap& b) { return w(a, b); });
}

PartialMap Hooks::star(const PartialMap& f) const {
  return wand_to_star([this](const PartialMap& a, const PartialMap& b) { return w(a, b); }, f);
}

Hooks Hooks::canonical() {
  Hooks h;
  h.wand = [](const PartialMap& f, const PartialMap& g) { return kleene_wand(f, g); };
  return h;
}

Hooks Hooks::constant_wand() {
  Hooks h;
  h.name = "constant-wand";
  h.wand = [](const PartialMap& f, const PartialMap& g) {
    require_disjoint(f, g, InterferenceRel::maximal(), "wand");
    return g;
  };
  return h;
}

Hooks Hooks::dropped_feedback() {
  Hooks h = canonical();
  h.name = "dropped-feedback";
  h.trace = [](const Matrix& g, std::size_t cut) {
    detail::require_traceable(g, cut, "trace");
    return submatrix(g, cut, g.rows(), cut, g.cols());
  };
  return h;
}

bool Verdict::check(std::string_view what, bool ok) {
  if (!ok && !failed_) {
    failed_ = true;
    what_ = what;
  }
  return ok;
}

void Verdict::error(std::string_view what) {
  if (!failed_) {
    failed_ = true;
    what_ = "exception: " + std::string(what);
  }
}

namespace {

nlohmann::json value_json(const Verdict::Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PartialMap>) {
          auto j = map_to_json(x);
          j["text"] = to_string(x);
          return j;
        } else if constexpr (std::is_same_v<T, Matrix>) {
          auto j = matrix_to_json(x);
          j["text"] = x.str();
          return j;
        } else if constexpr (std::is_same_v<T, DjMap>) {
          auto j = dj_to_json(x);
          j["text"] = to_string(x);
          return j;
        } else if constexpr (std::is_same_v<T, std::vector<PartialMap>>) {
          nlohmann::json a = nlohmann::json::array();
          for (const auto& m : x) {
            auto j = map_to_json(m);
            j["text"] = to_string(m);
            a.push_back(j);
          }
          return a;
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

nlohmann::json Verdict::counterexample() const {
  if (!failed_) return nullptr;
  nlohmann::json in = nlohmann::json::object();
  for (const auto& [name, v] : inputs_) in[name] = value_json(v);
  nlohmann::json j = {{"check", what_}, {"inputs", in}};
  if (lhs_) j["lhs"] = value_json(*lhs_);
  if (rhs_) j["rhs"] = value_json(*rhs_);
  return j;
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json j = {{"law", law},
                      {"seed", seed},
                      {"cases", cases},
                      {"status", passed ? "pass" : "fail"},
                      {"counterexample", counterexample},
                      {"mode", mode == Mode::sampled ? "sampled" : "exhaustive"},
                      {"hooks", hooks},
                      {"vacuous", vacuous},
                      {"seconds", seconds},
                      {"bounds",
                       {{"max_size", bounds.max_size},
                        {"max_parts", bounds.max_parts},
                        {"max_family", bounds.max_family},
                        {"max_gens", bounds.max_gens}}}};
  if (failing_case) {
    j["case_index"] = *failing_case;
    if (mode == Mode::sampled) j["case_seed"] = case_seed(seed, *failing_case);
  }
  return j;
}

const std::vector<Law>& registry() {
  static const std::vector<Law> all = [] {
    std::vector<Law> out;
    for (auto group : {laws::finpar_laws, laws::interference_laws, laws::join_laws, laws::wand_laws,
                       laws::star_laws, laws::dj_laws, laws::mat_laws, laws::trace_laws}) {
      for (auto& l : group()) out.push_back(std::move(l));
    }
    return out;
  }();
  return all;
}

const Law& find_law(std::string_view id) {
  for (const auto& l : registry()) {
    if (l.id == id) return l;
    for (const auto& a : l.aliases) {
      if (a == id) return l;
    }
  }
  throw UnknownLaw("unknown law \"" + std::string(id) + "\"");
}

namespace {

template <class Body>
LawReport sweep(LawReport rep, std::size_t n, Exec exec, Body body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<char> fail(n, 0), vac(n, 0);
  std::vector<nlohmann::json> ce(n);
  auto one = [&](std::size_t i) {
    Verdict v;
    try {
      body(i, v);
    } catch (const std::exception& e) {
      v.error(e.what());
    }
    vac[i] = v.is_vacuous() ? 1 : 0;
    if (v.failed()) {
      fail[i] = 1;
      ce[i] = v.counterexample();
    }
  };
  if (exec == Exec::parallel) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) one(i);
  }
  rep.cases = n;
  for (std::size_t i = 0; i < n; ++i) {
    rep.vacuous += static_cast<std::size_t>(vac[i]);
    if (fail[i] && !rep.failing_case) {
      rep.passed = false;
      rep.failing_case = i;
      rep.counterexample = ce[i];
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

LawReport run_law(const Law& law, std::uint64_t seed, std::size_t cases, const SizeBounds& bounds, const Hooks& hooks,
                  Exec exec) {
  LawReport rep;
  rep.law = law.id;
  rep.seed = seed;
  rep.bounds = bounds;
  rep.hooks = hooks.name;
  return sweep(rep, cases, exec, [&](std::size_t i, Verdict& v) {
    Rng rng(case_seed(seed, i));
    law.sample(rng, bounds, hooks, v);
  });
}

LawReport run_law(std::string_view id, std::uint64_t seed, std::size_t cases, const SizeBounds& bounds,
                  const Hooks& hooks, Exec exec) {
  return run_law(find_law(id), seed, cases, bounds, hooks, exec);
}

LawReport run_exhaustive(const Law& law, const SizeBounds& bounds, const Hooks& hooks, Exec exec) {
  if (!law.exhaustive) throw PreconditionError("law " + law.id + " has no exhaustive mode");
  const ExhaustivePlan plan = law.exhaustive(bounds);
  LawReport rep;
  rep.law = law.id;
  rep.mode = Mode::exhaustive;
  rep.bounds = bounds;
  rep.hooks = hooks.name;
  return sweep(rep, plan.count, exec, [&](std::size_t i, Verdict& v) { plan.check(i, hooks, v); });
}

LawReport replay(const LawReport& report, const Hooks& hooks) {
  if (!report.failing_case) throw PreconditionError("replay: the report has no failing case");
  const Law& law = find_law(report.law);
  const std::size_t idx = *report.failing_case;
  LawReport rep = report;
  rep.failing_case.reset();
  rep.counterexample = nullptr;
  rep.passed = true;
  rep.vacuous = 0;
  if (report.mode == Mode::sampled) {
    return sweep(rep, 1, Exec::serial, [&](std::size_t, Verdict& v) {
      Rng rng(case_seed(report.seed, idx));
      law.sample(rng, report.bounds, hooks, v);
    });
  }
  const ExhaustivePlan plan = law.exhaustive(report.bounds);
  auto out = sweep(rep, 1, Exec::serial, [&](std::size_t, Verdict& v) { plan.check(idx, hooks, v); });
  if (out.failing_case) out.failing_case = idx;
  return out;
}

const std::vector<std::string>& required_labels() {
  static const std::vector<std::string> labels = {
      "R.1",  "R.2",  "R.3",  "R.4",  "⊥.0",  "⊥.1",  "⊥.2",  "⊥.3",  "⊥.4",  "⊥.5",  "𝒪⊥.0", "𝒪⊥.1",
      "𝒪⊥.2", "𝒪⊥.3", "𝒪⊥.4", "⊔.1",  "⊔.2",  "⊔.3",  "⊔.4",  "⩚.1",  "⩚.2",  "⩚.3",  "⩚.4",  "Alt.⩚.1",
      "Alt.⩚.2", "Alt.⩚.3", "\\.1", "\\.2", "⋆.1", "⋆.2", "⋆.3", "D.1", "D.2", "d.1", "d.2",
      "Trace.Tightening", "Trace.Sliding", "Trace.Vanishing", "Trace.Superposing", "Trace.Yanking", "Trace.Uniform",
      "Iter.Iteration", "Iter.Naturality", "Iter.Dinaturality", "Iter.Diagonal", "Iter.Uniform",
      "wand.uniform", "wand.lax", "wand.colax", "wand.restricted-guard", "wand.zero-body", "wand.zero-guard",
      "wand.split-guard", "wand.total-body", "wand.total-guard", "wand.unrolling"};
  return labels;
}

}  // namespace iterlab
