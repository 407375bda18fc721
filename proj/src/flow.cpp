#include "iterlab/flow.hpp"

#include <cctype>
#include <set>

#include "iterlab/interference.hpp"
#include "iterlab/wand.hpp"

namespace iterlab::flow {

namespace {

enum class Tok { ident, arrow, lbrace, rbrace, lparen, rparen, semi, bar, colon, equals, end };

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident:
      return "'" + t.text + "'";
    case Tok::end:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Pos p;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++p.line;
        p.col = 1;
      } else {
        ++p.col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const Pos at = p;
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", at});
      advance(2);
      continue;
    }
    Tok k = Tok::end;
    switch (c) {
      case '{': k = Tok::lbrace; break;
      case '}': k = Tok::rbrace; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ';': k = Tok::semi; break;
      case '|': k = Tok::bar; break;
      case ':': k = Tok::colon; break;
      case '=': k = Tok::equals; break;
      default: break;
    }
    if (k != Tok::end) {
      out.push_back({k, std::string(1, c), at});
      advance(1);
      continue;
    }
    if (!ident_char(c)) throw ParseError(at, std::string("unexpected character '") + c + "'");
    std::size_t j = i;
    // A '-' only ends a name when it starts an arrow.
    while (j < src.size() && ident_char(src[j])) ++j;
    out.push_back({Tok::ident, std::string(src.substr(i, j - i)), at});
    advance(j - i);
  }
  out.push_back({Tok::end, "", p});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"set",  "map",  "let",     "eval",     "at",    "check", "disjoint",
                                          "until", "do", "star", "restrict", "compl", "zero",  "id"};
  return k;
}

bool starts_item(const Token& t) {
  return t.kind == Tok::ident && (t.text == "set" || t.text == "map" || t.text == "let" || t.text == "eval" ||
                                  t.text == "check");
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (peek().kind != Tok::end) p.items.push_back(item());
    return p;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) {
    throw ParseError(t.pos, "expected " + expected + ", found " + describe(t));
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what);
    return take();
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::ident && peek().text == kw; }

  void keyword(const char* kw) {
    if (!at_keyword(kw)) fail(peek(), std::string("'") + kw + "'");
    take();
  }

  const Token& name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::ident || keywords().count(t.text)) fail(t, what);
    return take();
  }

  const SetDecl& set_ref(const Token& t) {
    auto it = sets_.find(t.text);
    if (it == sets_.end()) throw ParseError(t.pos, "unknown set '" + t.text + "'");
    return *it->second;
  }

  void value_ref(const Token& t) {
    if (!values_.count(t.text)) throw ParseError(t.pos, "unknown map '" + t.text + "'");
  }

  void declare_value(const Token& t) {
    if (values_.count(t.text)) throw ParseError(t.pos, "map '" + t.text + "' is already defined");
    values_.insert(t.text);
  }

  static bool has_label(const SetDecl& s, const std::string& l) {
    return std::find(s.labels.begin(), s.labels.end(), l) != s.labels.end();
  }

  Item item() {
    const Token& t = peek();
    if (at_keyword("set")) return set_decl();
    if (at_keyword("map")) return map_decl();
    if (at_keyword("let")) {
      take();
      const Token& n = name("a binding name");
      expect(Tok::equals, "'='");
      LetDecl d{n.text, expr(), t.pos};
      declare_value(n);
      return d;
    }
    if (at_keyword("eval")) {
      take();
      const Token& n = name("a map name");
      value_ref(n);
      keyword("at");
      const Token& l = name("a label");
      return EvalDirective{n.text, l.text, t.pos};
    }
    if (at_keyword("check")) {
      take();
      const Token& a = name("a map name");
      value_ref(a);
      keyword("disjoint");
      const Token& b = name("a map name");
      value_ref(b);
      return CheckDirective{a.text, b.text, t.pos};
    }
    fail(t, "'set', 'map', 'let', 'eval' or 'check'");
  }

  SetDecl set_decl() {
    const Pos pos = take().pos;
    const Token& n = name("a set name");
    if (sets_.count(n.text)) throw ParseError(n.pos, "set '" + n.text + "' is already defined");
    expect(Tok::lbrace, "'{'");
    auto d = std::make_unique<SetDecl>(SetDecl{n.text, {}, pos});
    while (peek().kind != Tok::rbrace) {
      if (peek().kind == Tok::end || starts_item(peek())) fail(peek(), "a label or '}'");
      const Token& l = name("a label");
      if (has_label(*d, l.text)) throw ParseError(l.pos, "duplicate label '" + l.text + "' in set '" + n.text + "'");
      d->labels.push_back(l.text);
    }
    take();
    SetDecl copy = *d;
    sets_[n.text] = std::move(d);
    return copy;
  }

  MapDecl map_decl() {
    const Pos pos = take().pos;
    const Token& n = name("a map name");
    expect(Tok::colon, "':'");
    const Token& src = name("a set name");
    const SetDecl& s = set_ref(src);
    expect(Tok::arrow, "'->'");
    const Token& dst = name("a set name");
    const SetDecl& d = set_ref(dst);
    expect(Tok::lbrace, "'{'");
    MapDecl m{n.text, src.text, dst.text, {}, pos};
    std::set<std::string> seen;
    while (peek().kind != Tok::rbrace) {
      if (peek().kind == Tok::end || starts_item(peek())) fail(peek(), "an arrow or '}'");
      const Token& a = name("a label");
      if (!has_label(s, a.text)) throw ParseError(a.pos, "'" + a.text + "' is not a label of set '" + s.name + "'");
      if (!seen.insert(a.text).second) throw ParseError(a.pos, "'" + a.text + "' is mapped twice");
      expect(Tok::arrow, "'->'");
      const Token& b = name("a label");
      if (!has_label(d, b.text)) throw ParseError(b.pos, "'" + b.text + "' is not a label of set '" + d.name + "'");
      m.arrows.emplace_back(a.text, b.text);
    }
    take();
    declare_value(n);
    return m;
  }

  // expr := seq ('|' seq)* ; seq := unary (';' unary)*
  ExprPtr expr() {
    ExprPtr e = seq();
    while (peek().kind == Tok::bar) {
      const Pos pos = take().pos;
      e = std::make_shared<Expr>(Expr{Join{e, seq()}, pos});
    }
    return e;
  }

  ExprPtr seq() {
    ExprPtr e = unary();
    while (peek().kind == Tok::semi) {
      const Pos pos = take().pos;
      e = std::make_shared<Expr>(Expr{Seq{e, unary()}, pos});
    }
    return e;
  }

  ExprPtr unary() {
    const Token& t = peek();
    const Pos pos = t.pos;
    if (t.kind == Tok::lparen) {
      take();
      ExprPtr e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    if (t.kind != Tok::ident) fail(t, "an expression");
    if (t.text == "until") {
      take();
      const Token& g = name("a guard map name");
      value_ref(g);
      keyword("do");
      return std::make_shared<Expr>(Expr{Until{g.text, g.pos, unary()}, pos});
    }
    if (t.text == "star") {
      take();
      return std::make_shared<Expr>(Expr{Star{unary()}, pos});
    }
    if (t.text == "restrict") {
      take();
      return std::make_shared<Expr>(Expr{Restrict{unary()}, pos});
    }
    if (t.text == "compl") {
      take();
      return std::make_shared<Expr>(Expr{Complement{unary()}, pos});
    }
    if (t.text == "zero") {
      take();
      const Token& a = name("a set name");
      set_ref(a);
      const Token& b = name("a set name");
      set_ref(b);
      return std::make_shared<Expr>(Expr{Zero{a.text, b.text}, pos});
    }
    if (t.text == "id") {
      take();
      const Token& a = name("a set name");
      set_ref(a);
      return std::make_shared<Expr>(Expr{Id{a.text}, pos});
    }
    const Token& n = name("an expression");
    value_ref(n);
    return std::make_shared<Expr>(Expr{MapRef{n.text}, pos});
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::map<std::string, std::unique_ptr<SetDecl>> sets_;
  std::set<std::string> values_;
};

// Binding strength for printing: join 0, seq 1, prefix forms 2.
int level(const Expr& e) {
  if (std::holds_alternative<Join>(e.node)) return 0;
  if (std::holds_alternative<Seq>(e.node)) return 1;
  return 2;
}

std::string print_at(const Expr& e, int need) {
  std::string s = print(e);
  return level(e) < need ? "(" + s + ")" : s;
}

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

}  // namespace

bool same_expr(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const MapRef& x) { return x.name == std::get<MapRef>(b.node).name; },
          [&](const Seq& x) {
            const auto& y = std::get<Seq>(b.node);
            return same_expr(*x.lhs, *y.lhs) && same_expr(*x.rhs, *y.rhs);
          },
          [&](const Join& x) {
            const auto& y = std::get<Join>(b.node);
            return same_expr(*x.lhs, *y.lhs) && same_expr(*x.rhs, *y.rhs);
          },
          [&](const Until& x) {
            const auto& y = std::get<Until>(b.node);
            return x.guard == y.guard && same_expr(*x.body, *y.body);
          },
          [&](const Star& x) { return same_expr(*x.arg, *std::get<Star>(b.node).arg); },
          [&](const Restrict& x) { return same_expr(*x.arg, *std::get<Restrict>(b.node).arg); },
          [&](const Complement& x) { return same_expr(*x.arg, *std::get<Complement>(b.node).arg); },
          [&](const Zero& x) {
            const auto& y = std::get<Zero>(b.node);
            return x.src == y.src && x.dst == y.dst;
          },
          [&](const Id& x) { return x.set == std::get<Id>(b.node).set; },
      },
      a.node);
}

bool same_program(const Program& a, const Program& b) {
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    const Item &x = a.items[i], &y = b.items[i];
    if (x.index() != y.index()) return false;
    const bool same = std::visit(
        overloaded{
            [&](const SetDecl& s) {
              const auto& t = std::get<SetDecl>(y);
              return s.name == t.name && s.labels == t.labels;
            },
            [&](const MapDecl& s) {
              const auto& t = std::get<MapDecl>(y);
              return s.name == t.name && s.src == t.src && s.dst == t.dst && s.arrows == t.arrows;
            },
            [&](const LetDecl& s) {
              const auto& t = std::get<LetDecl>(y);
              return s.name == t.name && same_expr(*s.expr, *t.expr);
            },
            [&](const EvalDirective& s) {
              const auto& t = std::get<EvalDirective>(y);
              return s.name == t.name && s.label == t.label;
            },
            [&](const CheckDirective& s) {
              const auto& t = std::get<CheckDirective>(y);
              return s.lhs == t.lhs && s.rhs == t.rhs;
            },
        },
        x);
    if (!same) return false;
  }
  return true;
}

template <class T>
static std::size_t count_of(const Program& p) {
  std::size_t n = 0;
  for (const auto& i : p.items) n += std::holds_alternative<T>(i) ? 1 : 0;
  return n;
}

std::size_t Program::count_sets() const { return count_of<SetDecl>(*this); }
std::size_t Program::count_maps() const { return count_of<MapDecl>(*this); }
std::size_t Program::count_lets() const { return count_of<LetDecl>(*this); }
std::size_t Program::count_directives() const {
  return count_of<EvalDirective>(*this) + count_of<CheckDirective>(*this);
}

Program parse(std::string_view text) { return Parser(lex(text)).program(); }

std::string print(const Expr& e) {
  return std::visit(overloaded{
                        [](const MapRef& x) { return x.name; },
                        [](const Seq& x) { return print_at(*x.lhs, 1) + " ; " + print_at(*x.rhs, 2); },
                        [](const Join& x) { return print_at(*x.lhs, 0) + " | " + print_at(*x.rhs, 1); },
                        [](const Until& x) { return "until " + x.guard + " do " + print_at(*x.body, 2); },
                        [](const Star& x) { return "star " + print_at(*x.arg, 2); },
                        [](const Restrict& x) { return "restrict " + print_at(*x.arg, 2); },
                        [](const Complement& x) { return "compl " + print_at(*x.arg, 2); },
                        [](const Zero& x) { return "zero " + x.src + " " + x.dst; },
                        [](const Id& x) { return "id " + x.set; },
                    },
                    e.node);
}

std::string print(const Item& item) {
  return std::visit(overloaded{
                        [](const SetDecl& s) {
                          std::string out = "set " + s.name + " {";
                          for (std::size_t i = 0; i < s.labels.size(); ++i) out += (i ? " " : "") + s.labels[i];
                          return out + "}";
                        },
                        [](const MapDecl& m) {
                          std::string out = "map " + m.name + " : " + m.src + " -> " + m.dst + " {";
                          for (std::size_t i = 0; i < m.arrows.size(); ++i) {
                            out += (i ? " " : "") + m.arrows[i].first + "->" + m.arrows[i].second;
                          }
                          return out + "}";
                        },
                        [](const LetDecl& l) { return "let " + l.name + " = " + print(*l.expr); },
                        [](const EvalDirective& d) { return "eval " + d.name + " at " + d.label; },
                        [](const CheckDirective& d) { return "check " + d.lhs + " disjoint " + d.rhs; },
                    },
                    item);
}

std::string print(const Program& p) {
  std::string out;
  for (const auto& i : p.items) out += print(i) + "\n";
  return out;
}

Evaluator::Evaluator(const Program& p) : prog_(p) {
  for (const auto& item : p.items) {
    if (const auto* s = std::get_if<SetDecl>(&item)) {
      sets_.emplace(s->name, FinObj(s->labels));
    } else if (const auto* m = std::get_if<MapDecl>(&item)) {
      maps_[m->name] = m;
      types_[m->name] = {m->src, m->dst};
    } else if (const auto* l = std::get_if<LetDecl>(&item)) {
      types_[l->name] = type_of(*l->expr);
      lets_[l->name] = l;
    }
  }
}

const FinObj& Evaluator::set(const std::string& name) const { return sets_.at(name); }

Evaluator::Type Evaluator::type_of(const Expr& e) const {
  auto endo = [&](const Expr& arg, const char* what) {
    Type t = type_of(arg);
    if (t.src != t.dst) {
      throw SemanticError(arg.pos, std::string(what) + " must be an endomorphism, got " + t.src + " -> " + t.dst);
    }
    return t;
  };
  return std::visit(
      overloaded{
          [&](const MapRef& x) { return types_.at(x.name); },
          [&](const Seq& x) {
            const Type a = type_of(*x.lhs), b = type_of(*x.rhs);
            if (a.dst != b.src) {
              throw SemanticError(e.pos, "cannot compose " + a.src + " -> " + a.dst + " with " + b.src + " -> " + b.dst);
            }
            return Type{a.src, b.dst};
          },
          [&](const Join& x) {
            const Type a = type_of(*x.lhs), b = type_of(*x.rhs);
            if (a.src != b.src || a.dst != b.dst) {
              throw SemanticError(e.pos, "cannot join " + a.src + " -> " + a.dst + " with " + b.src + " -> " + b.dst);
            }
            return a;
          },
          [&](const Until& x) {
            const Type body = endo(*x.body, "body");
            const Type g = types_.at(x.guard);
            if (g.src != body.src) {
              throw SemanticError(x.guard_pos, "guard '" + x.guard + "' starts at " + g.src + " but the body runs on " +
                                                   body.src);
            }
            return g;
          },
          [&](const Star& x) { return endo(*x.arg, "argument of star"); },
          [&](const Restrict& x) {
            const Type t = type_of(*x.arg);
            return Type{t.src, t.src};
          },
          [&](const Complement& x) { return endo(*x.arg, "argument of compl"); },
          [&](const Zero& x) { return Type{x.src, x.dst}; },
          [&](const Id& x) { return Type{x.set, x.set}; },
      },
      e.node);
}

const PartialMap& Evaluator::value(const std::string& name) const {
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  PartialMap v;
  if (auto m = maps_.find(name); m != maps_.end()) {
    const FinObj& src = sets_.at(m->second->src);
    const FinObj& dst = sets_.at(m->second->dst);
    std::vector<int> t(static_cast<std::size_t>(src.size()), kUndef);
    for (const auto& [a, b] : m->second->arrows) t[static_cast<std::size_t>(*src.index_of(a))] = *dst.index_of(b);
    v = PartialMap(src, dst, std::move(t));
  } else {
    v = eval(*lets_.at(name)->expr);
  }
  return cache_.emplace(name, std::move(v)).first->second;
}

namespace {

std::optional<int> overlap(const PartialMap& f, const PartialMap& g) {
  for (int x = 0; x < f.dom().size(); ++x) {
    if (f.defined_at(x) && g.defined_at(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

PartialMap Evaluator::eval(const Expr& e) const {
  return std::visit(
      overloaded{
          [&](const MapRef& x) { return value(x.name); },
          [&](const Seq& x) { return compose(eval(*x.lhs), eval(*x.rhs)); },
          [&](const Join& x) {
            const PartialMap a = eval(*x.lhs), b = eval(*x.rhs);
            if (auto p = overlap(a, b)) {
              throw SemanticError(e.pos, "join of overlapping maps: both are defined at " + a.dom().label(*p));
            }
            return join(a, b);
          },
          [&](const Until& x) {
            const PartialMap body = eval(*x.body);
            const PartialMap& guard = value(x.guard);
            if (auto p = overlap(body, guard)) {
              throw SemanticError(e.pos, "until: guard '" + x.guard + "' and the body are both defined at " +
                                             body.dom().label(*p));
            }
            return kleene_wand(body, guard);
          },
          [&](const Star& x) { return upper_star(eval(*x.arg)); },
          [&](const Restrict& x) { return restriction(eval(*x.arg)); },
          [&](const Complement& x) {
            const PartialMap a = eval(*x.arg);
            if (!a.is_rest_idem()) {
              for (int p = 0; p < a.dom().size(); ++p) {
                if (a.defined_at(p) && *a(p) != p) {
                  throw SemanticError(e.pos, "compl needs a restriction idempotent, but it sends " + a.dom().label(p) +
                                                 " to " + a.cod().label(*a(p)));
                }
              }
            }
            return complement(a);
          },
          [&](const Zero& x) { return PartialMap::zero(sets_.at(x.src), sets_.at(x.dst)); },
          [&](const Id& x) { return PartialMap::identity(sets_.at(x.set)); },
      },
      e.node);
}

std::vector<DirectiveResult> Evaluator::run() const {
  std::vector<DirectiveResult> out;
  for (const auto& item : prog_.items) {
    if (const auto* d = std::get_if<EvalDirective>(&item)) {
      const PartialMap& f = value(d->name);
      const auto x = f.dom().index_of(d->label);
      if (!x) {
        throw SemanticError(d->pos, "'" + d->label + "' is not a label of the domain " + types_.at(d->name).src + " of '" +
                                        d->name + "'");
      }
      const auto y = f(*x);
      out.push_back({print(item), y ? f.cod().label(*y) : "undefined"});
    } else if (const auto* c = std::get_if<CheckDirective>(&item)) {
      const Type a = types_.at(c->lhs), b = types_.at(c->rhs);
      if (a.src != b.src) {
        throw SemanticError(c->pos, "cannot compare maps out of " + a.src + " and " + b.src);
      }
      const auto p = overlap(value(c->lhs), value(c->rhs));
      out.push_back({print(item), p ? "overlap at " + value(c->lhs).dom().label(*p) : "disjoint"});
    }
  }
  return out;
}

}  // namespace iterlab::flow
