#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iterlab/errors.hpp"
#include "iterlab/finpar.hpp"

namespace iterlab::flow {

struct Pos {
  int line = 1;
  int col = 1;
};

// A diagnostic with a source position. ParseError covers lexing, syntax and name
// resolution; SemanticError covers typing and evaluation.
class Diagnostic : public Error {
 public:
  Diagnostic(Pos pos, const std::string& msg)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg), pos_(pos), msg_(msg) {}
  Pos pos() const { return pos_; }
  const std::string& message() const { return msg_; }

 private:
  Pos pos_;
  std::string msg_;
};

class ParseError : public Diagnostic {
 public:
  using Diagnostic::Diagnostic;
};

class SemanticError : public Diagnostic {
 public:
  using Diagnostic::Diagnostic;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct MapRef {
  std::string name;
};
struct Seq {
  ExprPtr lhs, rhs;
};
struct Join {
  ExprPtr lhs, rhs;
};
struct Until {
  std::string guard;
  Pos guard_pos;
  ExprPtr body;
};
struct Star {
  ExprPtr arg;
};
struct Restrict {
  ExprPtr arg;
};
struct Complement {
  ExprPtr arg;
};
struct Zero {
  std::string src, dst;
};
struct Id {
  std::string set;
};

struct Expr {
  std::variant<MapRef, Seq, Join, Until, Star, Restrict, Complement, Zero, Id> node;
  Pos pos;
};

// Structural equality, ignoring positions.
bool same_expr(const Expr& a, const Expr& b);

struct SetDecl {
  std::string name;
  std::vector<std::string> labels;
  Pos pos;
};

struct MapDecl {
  std::string name, src, dst;
  std::vector<std::pair<std::string, std::string>> arrows;
  Pos pos;
};

struct LetDecl {
  std::string name;
  ExprPtr expr;
  Pos pos;
};

struct EvalDirective {
  std::string name, label;
  Pos pos;
};

struct CheckDirective {
  std::string lhs, rhs;
  Pos pos;
};

using Item = std::variant<SetDecl, MapDecl, LetDecl, EvalDirective, CheckDirective>;

struct Program {
  std::vector<Item> items;

  std::size_t count_sets() const;
  std::size_t count_maps() const;
  std::size_t count_lets() const;
  std::size_t count_directives() const;
};

bool same_program(const Program& a, const Program& b);

// Lexing, syntax and name resolution. Throws ParseError.
Program parse(std::string_view text);

// Canonical text: one item per line, minimal parentheses.
std::string print(const Program& p);
std::string print(const Expr& e);

struct Value {
  std::string name;
  PartialMap map;
};

struct DirectiveResult {
  std::string directive;  // the directive as printed
  std::string output;     // `done`, `undefined`, `disjoint`, `overlap at s1`, ...
};

// Typed environment built from a parsed program.
class Evaluator {
 public:
  // Type-checks every binding; throws SemanticError.
  explicit Evaluator(const Program& p);

  const FinObj& set(const std::string& name) const;
  // Value of a map or let binding, evaluated on first use.
  const PartialMap& value(const std::string& name) const;
  PartialMap eval(const Expr& e) const;

  // Runs all directives in order; throws SemanticError on the first runtime error.
  std::vector<DirectiveResult> run() const;

 private:
  struct Type {
    std::string src, dst;
  };
  Type type_of(const Expr& e) const;

  const Program& prog_;
  std::map<std::string, FinObj> sets_;
  std::map<std::string, Type> types_;
  std::map<std::string, const MapDecl*> maps_;
  std::map<std::string, const LetDecl*> lets_;
  mutable std::map<std::string, PartialMap> cache_;
};

}  // namespace iterlab::flow
