#include "iterlab/djcomp.hpp"

#include <algorithm>

#include "iterlab/errors.hpp"

namespace iterlab {

namespace {

void require_same_rel(const DjMap& s, const DjMap& t, std::string_view what) {
  if (!(s.rel() == t.rel())) {
    throw PreconditionError(std::string(what) + ": maps live over different interference relations (" +
                            s.rel().name() + " vs " + t.rel().name() + ")");
  }
}

}  // namespace

DjMap::DjMap(FinObj dom, FinObj cod, std::vector<PartialMap> gens, InterferenceRel rel)
    : dom_(std::move(dom)), cod_(std::move(cod)), gens_(std::move(gens)), rel_(std::move(rel)) {
  for (const auto& g : gens_) {
    if (!(g.dom() == dom_) || !(g.cod() == cod_)) {
      throw ShapeError("generator " + to_string(g) + " is not a map " + dom_.describe() + " -> " + cod_.describe());
    }
    if (g.is_zero()) throw PreconditionError("generator sets must not contain the zero map");
  }
  std::sort(gens_.begin(), gens_.end());
  if (std::adjacent_find(gens_.begin(), gens_.end()) != gens_.end()) {
    throw PreconditionError("generator set contains a repeated map");
  }
  if (auto c = first_clash(rel_, gens_)) {
    throw PreconditionError("generators " + to_string(gens_[c->first]) + " and " + to_string(gens_[c->second]) +
                            " are not disjoint");
  }
}

DjMap DjMap::zero(const FinObj& dom, const FinObj& cod, InterferenceRel rel) { return DjMap(dom, cod, {}, rel); }

DjMap DjMap::identity(const FinObj& obj, InterferenceRel rel) {
  if (obj.size() == 0) return DjMap(obj, obj, {}, rel);
  return DjMap(obj, obj, {PartialMap::identity(obj)}, rel);
}

bool operator==(const DjMap& a, const DjMap& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.gens_ == b.gens_;
}

DjMap dj_embed(const PartialMap& f, InterferenceRel rel) {
  if (f.is_zero()) return DjMap(f.dom(), f.cod(), {}, rel);
  return DjMap(f.dom(), f.cod(), {f}, rel);
}

DjMap dj_compose(const DjMap& s, const DjMap& t) {
  if (!(s.cod() == t.dom())) {
    throw ShapeError("cannot compose DJ maps: " + s.cod().describe() + " vs " + t.dom().describe());
  }
  require_same_rel(s, t, "dj_compose");
  std::vector<PartialMap> out;
  for (const auto& f : s.gens()) {
    for (const auto& g : t.gens()) {
      PartialMap fg = compose(f, g);
      if (!fg.is_zero()) out.push_back(std::move(fg));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return DjMap(s.dom(), t.cod(), std::move(out), s.rel());
}

DjMap dj_restriction(const DjMap& s) {
  std::vector<PartialMap> out;
  for (const auto& f : s.gens()) out.push_back(restriction(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return DjMap(s.dom(), s.dom(), std::move(out), s.rel());
}

bool dj_leq(const DjMap& s, const DjMap& t) {
  if (!(s.dom() == t.dom()) || !(s.cod() == t.cod())) throw ShapeError("dj_leq: maps are not parallel");
  for (const auto& f : s.gens()) {
    bool dominated = std::any_of(t.gens().begin(), t.gens().end(), [&](const PartialMap& g) { return leq(f, g); });
    if (!dominated) return false;
  }
  return true;
}

bool dj_perp(const DjMap& s, const DjMap& t) {
  if (!(s.dom() == t.dom())) throw ShapeError("dj_perp: domains differ");
  require_same_rel(s, t, "dj_perp");
  for (const auto& f : s.gens()) {
    for (const auto& g : t.gens()) {
      if (!perp(s.rel(), f, g)) return false;
    }
  }
  return true;
}

DjMap dj_join(std::span<const DjMap> fam, const FinObj& dom, const FinObj& cod, InterferenceRel rel) {
  std::vector<PartialMap> out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!(fam[i].dom() == dom) || !(fam[i].cod() == cod)) throw ShapeError("dj_join: member has the wrong type");
    if (!(fam[i].rel() == rel)) throw PreconditionError("dj_join: member lives over a different relation");
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!dj_perp(fam[i], fam[j])) {
        throw PreconditionError("dj_join: members " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not disjoint");
      }
    }
    out.insert(out.end(), fam[i].gens().begin(), fam[i].gens().end());
  }
  return DjMap(dom, cod, std::move(out), rel);
}

DjMap dj_join(const DjMap& s, const DjMap& t) {
  const DjMap fam[] = {s, t};
  return dj_join(fam, s.dom(), s.cod(), s.rel());
}

DjMap dj_wand(const DjMap& f, const DjMap& g) {
  if (!(f.dom() == f.cod())) throw ShapeError("dj_wand: the body is not an endomorphism");
  if (!(f.dom() == g.dom())) throw ShapeError("dj_wand: body and exit have different domains");
  if (!dj_perp(f, g)) throw PreconditionError("dj_wand: body and exit are not disjoint");
  std::vector<DjMap> terms{g};
  DjMap term = g;
  const int cap = f.dom().size() + 1;
  for (int n = 1;; ++n) {
    term = dj_compose(f, term);
    if (term.is_zero()) break;
    if (n > cap) throw std::logic_error("dj_wand: iteration failed to stabilise");
    terms.push_back(term);
  }
  return dj_join(terms, g.dom(), g.cod(), g.rel());
}

PartialMap dj_flatten(const DjMap& s) {
  return join(InterferenceRel::maximal(), s.gens(), s.dom(), s.cod());
}

std::string to_string(const DjMap& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.gens().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.gens()[i]);
  }
  return out + "}";
}

}  // namespace iterlab
