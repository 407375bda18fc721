#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "iterlab/djcomp.hpp"
#include "iterlab/finpar.hpp"
#include "iterlab/matext.hpp"
#include "iterlab/rng.hpp"

namespace iterlab {

// Object of size in [min_size, max_size].
FinObj gen_obj(Rng& rng, int max_size, int min_size = 0);

// Density drawn from {0, 1/4, 1/2, 3/4, 1}; the ends make zero and total maps common.
double gen_density(Rng& rng);

// Each point is defined with probability `density`, target uniform over cod.
PartialMap gen_partial_map(Rng& rng, const FinObj& dom, const FinObj& cod, double density);
PartialMap gen_partial_map(Rng& rng, const FinObj& dom, const FinObj& cod);
PartialMap gen_total_map(Rng& rng, const FinObj& dom, const FinObj& cod);
PartialMap gen_idempotent(Rng& rng, const FinObj& obj);

// f: X -> X and g: X -> A with disjoint domains: every point goes to f, g or neither.
std::pair<PartialMap, PartialMap> gen_disjoint_pair(Rng& rng, const FinObj& x, const FinObj& a);

// k maps dom -> cod with pairwise disjoint domains.
std::vector<PartialMap> gen_disjoint_family(Rng& rng, const FinObj& dom, const FinObj& cod, int k);

// Random s: dom -> via.dom() with s via = target (pointwise), or nothing if some
// required fibre is empty. Where target is undefined, s is undefined or escapes
// dom(via); points in `forbid` are never given such a free choice.
std::optional<PartialMap> solve_through(Rng& rng, const PartialMap& target, const PartialMap& via,
                                        std::uint64_t forbid = 0);

// Finite list of 0..max_parts objects of size <= max_size.
MatObj gen_matobj(Rng& rng, int max_parts, int max_size, int min_parts = 0);
// Random matrix, generated as a random flat map.
Matrix gen_matrix(Rng& rng, const MatObj& dom, const MatObj& cod, double density);
Matrix gen_matrix(Rng& rng, const MatObj& dom, const MatObj& cod);
// k matrices whose flat domains are pairwise disjoint.
std::vector<Matrix> gen_disjoint_matrices(Rng& rng, const MatObj& dom, const MatObj& cod, int k);

// Generator set with at most max_gens nonzero, pairwise disjoint members.
DjMap gen_dj(Rng& rng, const FinObj& dom, const FinObj& cod, int max_gens);

std::uint64_t gen_mask(Rng& rng, int size);

// Exhaustive enumeration of every partial map dom -> cod: (|cod| + 1)^|dom| maps,
// in table order with kUndef first.
std::vector<PartialMap> all_maps(const FinObj& dom, const FinObj& cod);

}  // namespace iterlab
