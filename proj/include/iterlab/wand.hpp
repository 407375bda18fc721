#pragma once

#include <functional>

#include "iterlab/finpar.hpp"
#include "iterlab/interference.hpp"

namespace iterlab {

using WandFn = std::function<PartialMap(const PartialMap& f, const PartialMap& g)>;
using StarFn = std::function<PartialMap(const PartialMap& f)>;

// f: X -> X, g: X -> A with f disjoint from g. Returns the join of f^n g over n >= 0.
PartialMap kleene_wand(const PartialMap& f, const PartialMap& g,
                       const InterferenceRel& rel = InterferenceRel::maximal());

// The wand under the minimal relation: f wand g = g.
PartialMap minimal_wand(const PartialMap& f, const PartialMap& g);

// Complement of a restriction idempotent (maximal relation only).
PartialMap complement(const PartialMap& e);

// whole \ part = complement(restriction(part)) whole. Requires part <= whole.
PartialMap relative_complement(const PartialMap& part, const PartialMap& whole);

// f* = f wand complement(restriction(f)).
PartialMap upper_star(const PartialMap& f);

PartialMap star_to_wand(const StarFn& star, const PartialMap& f, const PartialMap& g);
PartialMap wand_to_star(const WandFn& wand, const PartialMap& f);

// Throws PreconditionError naming a point where both f and g are defined.
void require_disjoint(const PartialMap& f, const PartialMap& g, const InterferenceRel& rel, std::string_view what);

}  // namespace iterlab
