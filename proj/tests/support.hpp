#pragma once

#include <vector>

#include "iterlab/finpar.hpp"

namespace iterlab::test {

// Map n -> m from a table, -1 meaning undefined.
inline PartialMap pm(int n, int m, std::vector<int> table) { return PartialMap(FinObj(n), FinObj(m), std::move(table)); }

inline constexpr int U = kUndef;

}  // namespace iterlab::test
