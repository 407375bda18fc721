#pragma once

#include <span>
#include <vector>

#include "iterlab/finpar.hpp"
#include "iterlab/interference.hpp"

namespace iterlab {

// A map of the disjoint-join completion: the down-set of a finite, zero-free,
// pairwise disjoint generator set. Generators are kept sorted, so equality of
// DjMaps is equality of generator sets.
class DjMap {
 public:
  DjMap() = default;
  DjMap(FinObj dom, FinObj cod, std::vector<PartialMap> gens, InterferenceRel rel = InterferenceRel::maximal());

  static DjMap zero(const FinObj& dom, const FinObj& cod, InterferenceRel rel = InterferenceRel::maximal());
  static DjMap identity(const FinObj& obj, InterferenceRel rel = InterferenceRel::maximal());

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::vector<PartialMap>& gens() const { return gens_; }
  const InterferenceRel& rel() const { return rel_; }

  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const DjMap& a, const DjMap& b);

 private:
  FinObj dom_;
  FinObj cod_;
  std::vector<PartialMap> gens_;
  InterferenceRel rel_ = InterferenceRel::maximal();
};

DjMap dj_embed(const PartialMap& f, InterferenceRel rel = InterferenceRel::maximal());
DjMap dj_compose(const DjMap& s, const DjMap& t);
DjMap dj_restriction(const DjMap& s);
bool dj_leq(const DjMap& s, const DjMap& t);
bool dj_perp(const DjMap& s, const DjMap& t);
DjMap dj_join(std::span<const DjMap> fam, const FinObj& dom, const FinObj& cod,
              InterferenceRel rel = InterferenceRel::maximal());
DjMap dj_join(const DjMap& s, const DjMap& t);
// Join of F^n G over n >= 0, computed on generator sets.
DjMap dj_wand(const DjMap& f, const DjMap& g);
// The single map below everything in s (pointwise union); defined when s's
// relation is contained in the maximal one.
PartialMap dj_flatten(const DjMap& s);

std::string to_string(const DjMap& s);

}  // namespace iterlab
