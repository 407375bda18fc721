#pragma once

#include <memory>
#include <vector>

#include "iterlab/gen.hpp"
#include "iterlab/interference.hpp"
#include "iterlab/lawlab.hpp"

namespace iterlab::laws {

std::vector<Law> finpar_laws();
std::vector<Law> interference_laws();
std::vector<Law> join_laws();
std::vector<Law> wand_laws();
std::vector<Law> star_laws();
std::vector<Law> dj_laws();
std::vector<Law> mat_laws();
std::vector<Law> trace_laws();

inline constexpr int kExhaustiveCarrier = 3;

// Every map a -> b for a, b <= 3.
const std::vector<PartialMap>& maps_of(int a, int b);

using Tuple = std::vector<PartialMap>;
using TupleCheck = std::function<void(const Tuple&, const Hooks&, Verdict&)>;

inline ExhaustivePlan tuple_plan(std::vector<Tuple> cases, TupleCheck check, std::string description) {
  auto shared = std::make_shared<const std::vector<Tuple>>(std::move(cases));
  ExhaustivePlan p;
  p.count = shared->size();
  p.description = std::move(description);
  p.check = [shared, check = std::move(check)](std::size_t i, const Hooks& h, Verdict& v) { check((*shared)[i], h, v); };
  return p;
}

// Pairs (f: A -> B, g: A -> C) over all carriers <= 3.
std::vector<Tuple> all_spans();
// Pairs (f: A -> B, g: B -> C) over all carriers <= 3.
std::vector<Tuple> all_chains();
// Single maps A -> B over all carriers <= 3.
std::vector<Tuple> all_singles();
// Endomorphisms on the n-point set.
const std::vector<PartialMap>& endos(int n);

inline FinObj obj(Rng& r, const SizeBounds& b, int min = 0) { return gen_obj(r, b.max_size, min); }

// Restriction idempotent below the carrier's identity, with random support.
inline PartialMap idem(Rng& r, const FinObj& a) { return gen_idempotent(r, a); }

inline const InterferenceRel& rel0() {
  static const InterferenceRel r = InterferenceRel::maximal();
  return r;
}
inline const InterferenceRel& reld() {
  static const InterferenceRel r = InterferenceRel::minimal();
  return r;
}

}  // namespace iterlab::laws
