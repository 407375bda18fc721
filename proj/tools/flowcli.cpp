// flowcli: run flowchart programs, check laws, compute traces, stars and wands.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "iterlab/flow.hpp"
#include "iterlab/json_io.hpp"
#include "iterlab/lawlab.hpp"
#include "iterlab/trace.hpp"
#include "iterlab/wand.hpp"

using namespace iterlab;

namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kSemantic = 2;
constexpr int kLawFailed = 3;

bool g_json = false;

int report(int code, const std::string& kind, const std::string& msg, std::optional<flow::Pos> pos = std::nullopt) {
  if (g_json) {
    json j = {{"error", {{"kind", kind}, {"message", msg}}}};
    if (pos) {
      j["error"]["line"] = pos->line;
      j["error"]["column"] = pos->col;
    }
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << kind << " error";
    if (pos) std::cerr << " at " << pos->line << ":" << pos->col;
    std::cerr << ": " << msg << "\n";
  }
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path = "") {
  const std::string text = g_json ? j.dump() : j.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream(out_path) << text << "\n";
  }
}

// Shared mapping of library exceptions onto exit codes.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const flow::ParseError& e) {
    return report(kParse, "parse", e.message(), e.pos());
  } catch (const flow::SemanticError& e) {
    return report(kSemantic, "semantic", e.message(), e.pos());
  } catch (const FormatError& e) {
    return report(kParse, "format", e.what());
  } catch (const UnknownLaw& e) {
    return report(kSemantic, "semantic", e.what());
  } catch (const Error& e) {
    return report(kSemantic, "semantic", e.what());
  } catch (const std::exception& e) {
    return report(kParse, "io", e.what());
  }
}

int cmd_run(const std::string& file) {
  return guarded([&] {
    const flow::Program prog = flow::parse(slurp(file));
    const flow::Evaluator ev(prog);
    const auto results = ev.run();
    if (g_json) {
      json arr = json::array();
      for (const auto& r : results) arr.push_back({{"directive", r.directive}, {"result", r.output}});
      std::cout << json{{"results", arr}}.dump() << "\n";
    } else {
      for (const auto& r : results) std::cout << r.output << "\n";
    }
    return kOk;
  });
}

struct LawArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  int max_size = 6;
  bool exhaustive = false;
  bool serial = false;
  std::string hooks = "canonical";
};

int cmd_laws(const LawArgs& a) {
  return guarded([&] {
    Hooks hooks;
    if (a.hooks == "canonical") {
      hooks = Hooks::canonical();
    } else if (a.hooks == "constant-wand") {
      hooks = Hooks::constant_wand();
    } else if (a.hooks == "dropped-feedback") {
      hooks = Hooks::dropped_feedback();
    } else {
      return report(kSemantic, "semantic", "unknown hooks '" + a.hooks + "'");
    }
    std::vector<const Law*> laws;
    if (a.all || a.ids.empty()) {
      for (const auto& l : registry()) laws.push_back(&l);
    } else {
      for (const auto& id : a.ids) laws.push_back(&find_law(id));
    }
    SizeBounds b;
    b.max_size = a.max_size;
    const Exec exec = a.serial ? Exec::serial : Exec::parallel;
    bool ok = true;
    json arr = json::array();
    for (const Law* l : laws) {
      if (a.exhaustive && !l->exhaustive) continue;
      const LawReport rep = a.exhaustive ? run_exhaustive(*l, b, hooks, exec) : run_law(*l, a.seed, a.cases, b, hooks, exec);
      ok = ok && rep.passed;
      if (g_json) {
        arr.push_back(rep.to_json());
      } else {
        std::cout << (rep.passed ? "pass " : "FAIL ") << l->id << "  cases=" << rep.cases;
        if (rep.vacuous) std::cout << " vacuous=" << rep.vacuous;
        std::cout << "\n";
        if (!rep.passed) std::cout << "  case " << *rep.failing_case << ": " << rep.counterexample.dump() << "\n";
      }
    }
    if (g_json) std::cout << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
    return ok ? kOk : kLawFailed;
  });
}

// Accepts a bare matrix (needs --cut) or a request {"matrix": ..., "cut": k}.
int cmd_trace(const std::string& file, std::optional<std::size_t> cut, const std::string& out) {
  return guarded([&] {
    const json doc = read_json(file);
    const bool request = doc.is_object() && doc.contains("matrix");
    if (!cut && request && doc.contains("cut")) {
      if (!doc["cut"].is_number_unsigned()) throw FormatError(file + ": \"cut\" must be a non-negative integer");
      cut = doc["cut"].get<std::size_t>();
    }
    if (!cut) throw FormatError(file + ": no cut given (use --cut or a {\"matrix\", \"cut\"} request)");
    const Matrix g = matrix_from_json(request ? doc["matrix"] : doc);
    emit(matrix_to_json(trace_n(g, *cut)), out);
    return kOk;
  });
}

int cmd_star(const std::string& file) {
  return guarded([&] {
    emit(map_to_json(upper_star(map_from_json(read_json(file)))));
    return kOk;
  });
}

int cmd_wand(const std::string& ffile, const std::string& gfile) {
  return guarded([&] {
    const PartialMap f = map_from_json(read_json(ffile));
    const PartialMap g = map_from_json(read_json(gfile));
    emit(map_to_json(kleene_wand(f, g)));
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowchart programs and iteration laws over finite partial maps"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");

  std::string file;
  auto* run = app.add_subcommand("run", "evaluate the directives of a .flow program");
  run->add_option("file", file)->required();

  LawArgs la;
  auto* laws = app.add_subcommand("laws", "run registered laws");
  laws->add_option("--law", la.ids, "law id or alias (repeatable)");
  laws->add_flag("--all", la.all, "every registered law");
  laws->add_option("--seed", la.seed);
  laws->add_option("--cases", la.cases);
  laws->add_option("--max-size", la.max_size);
  laws->add_flag("--exhaustive", la.exhaustive, "exhaustive mode, for laws that have one");
  laws->add_flag("--serial", la.serial, "run cases on one thread");
  laws->add_option("--hooks", la.hooks, "canonical, constant-wand or dropped-feedback");

  std::optional<std::size_t> cut;
  std::string out;
  auto* trace = app.add_subcommand("trace", "trace out the first parts of a matrix");
  trace->add_option("matrix", file)->required();
  trace->add_option("--cut", cut, "number of leading parts to trace out");
  trace->add_option("-o,--output", out);

  auto* star = app.add_subcommand("star", "upper star of an endomorphism");
  star->add_option("map", file)->required();

  std::string gfile;
  auto* wand = app.add_subcommand("wand", "Kleene wand of f and g");
  wand->add_option("f", file)->required();
  wand->add_option("g", gfile)->required();

  // --json is accepted after the subcommand too.
  for (auto* sub : {run, laws, trace, star, wand}) sub->add_flag("--json", g_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (run->parsed()) return cmd_run(file);
  if (laws->parsed()) return cmd_laws(la);
  if (trace->parsed()) return cmd_trace(file, cut, out);
  if (star->parsed()) return cmd_star(file);
  return cmd_wand(file, gfile);
}
