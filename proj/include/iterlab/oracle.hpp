#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "iterlab/finpar.hpp"
#include "iterlab/matext.hpp"

namespace iterlab {

// Loop reading of the wand: from x, return g(y) at the first point y of the f-trajectory
// where g is defined; undefined on dead ends and on revisiting a point. f and g must
// have disjoint domains.
std::optional<int> step_simulate(const PartialMap& f, const PartialMap& g, int x);

// The whole map x -> step_simulate(f, g, x).
PartialMap step_simulate_map(const PartialMap& f, const PartialMap& g);

// Feedback reading of a matrix trace on the flat view: from a point of the
// non-traced domain, follow g through the first `cut` parts until it leaves them.
Matrix trace_by_simulation(const Matrix& g, std::size_t cut);

inline constexpr int kEnumMaxX = 3;
inline constexpr int kEnumMaxA = 2;

// Every (f: X -> X, g: X -> A) with disjoint domains, each once. Sizes above
// X = 3 or A = 2 raise CapacityError.
std::vector<std::pair<PartialMap, PartialMap>> enumerate_all(int x_size, int a_size);
void for_each_disjoint_pair(int x_size, int a_size,
                            const std::function<void(const PartialMap&, const PartialMap&)>& visit);

// Closed form: each point goes to f (|X| ways), to g (|A| ways) or nowhere.
std::uint64_t disjoint_pair_count(int x_size, int a_size);

}  // namespace iterlab
