#include "iterlab/wand.hpp"

#include <cassert>

#include "iterlab/errors.hpp"

namespace iterlab {

void require_disjoint(const PartialMap& f, const PartialMap& g, const InterferenceRel& rel, std::string_view what) {
  if (perp(rel, f, g)) return;
  for (int x = 0; x < f.dom().size(); ++x) {
    if (f.defined_at(x) && g.defined_at(x)) {
      throw PreconditionError(std::string(what) + ": maps are not disjoint, both are defined at " +
                              f.dom().label(x));
    }
  }
  throw PreconditionError(std::string(what) + ": maps are not disjoint under the " + rel.name() + " relation (" +
                          to_string(f) + " and " + to_string(g) + ")");
}

PartialMap kleene_wand(const PartialMap& f, const PartialMap& g, const InterferenceRel& rel) {
  if (!f.is_endo()) throw ShapeError("wand: the body " + to_string(f) + " is not an endomorphism");
  require_same_dom(f, g, "wand");
  require_disjoint(f, g, rel, "wand");

  const int n = f.dom().size();
  std::vector<int> acc = g.table();
  PartialMap term = g;
  int steps = 0;
  // Nonzero terms have pairwise disjoint nonempty domains, so at most |X| of them follow g.
  while (true) {
    term = compose(f, term);
    if (term.is_zero()) break;
    ++steps;
    if (steps > n) throw std::logic_error("wand: iteration failed to stabilise within |X| + 1 steps");
    for (std::size_t x = 0; x < acc.size(); ++x) {
      const int y = term.table()[x];
      if (y == kUndef) continue;
      assert(acc[x] == kUndef);
      acc[x] = y;
    }
  }
  return PartialMap(g.dom(), g.cod(), std::move(acc));
}

PartialMap minimal_wand(const PartialMap& f, const PartialMap& g) {
  if (!f.is_endo()) throw ShapeError("wand: the body " + to_string(f) + " is not an endomorphism");
  require_same_dom(f, g, "wand");
  require_disjoint(f, g, InterferenceRel::minimal(), "wand");
  return g;
}

PartialMap complement(const PartialMap& e) {
  if (!e.is_rest_idem()) throw PreconditionError("complement: " + to_string(e) + " is not a restriction idempotent");
  std::vector<int> t(e.table().size(), kUndef);
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (e.table()[x] == kUndef) t[x] = static_cast<int>(x);
  }
  return PartialMap(e.dom(), e.cod(), std::move(t));
}

PartialMap relative_complement(const PartialMap& part, const PartialMap& whole) {
  require_parallel(part, whole, "relative complement");
  if (!leq(part, whole)) {
    throw PreconditionError("relative complement: " + to_string(part) + " is not below " + to_string(whole));
  }
  return compose(complement(restriction(part)), whole);
}

PartialMap upper_star(const PartialMap& f) {
  if (!f.is_endo()) throw ShapeError("star: " + to_string(f) + " is not an endomorphism");
  return kleene_wand(f, complement(restriction(f)));
}

PartialMap star_to_wand(const StarFn& star, const PartialMap& f, const PartialMap& g) {
  require_same_dom(f, g, "star_to_wand");
  require_disjoint(f, g, InterferenceRel::maximal(), "star_to_wand");
  return compose(star(f), g);
}

PartialMap wand_to_star(const WandFn& wand, const PartialMap& f) {
  return wand(f, complement(restriction(f)));
}

}  // namespace iterlab
