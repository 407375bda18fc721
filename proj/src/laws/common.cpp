#include "laws.hpp"

#include <array>

namespace iterlab::laws {

const std::vector<PartialMap>& maps_of(int a, int b) {
  static const auto table = [] {
    std::array<std::array<std::vector<PartialMap>, 4>, 4> t;
    for (int i = 0; i <= kExhaustiveCarrier; ++i) {
      for (int j = 0; j <= kExhaustiveCarrier; ++j) t[i][j] = all_maps(FinObj(i), FinObj(j));
    }
    return t;
  }();
  if (a < 0 || b < 0 || a > kExhaustiveCarrier || b > kExhaustiveCarrier) {
    throw CapacityError("exhaustive enumeration is limited to carriers of size <= 3");
  }
  return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const std::vector<PartialMap>& endos(int n) { return maps_of(n, n); }

std::vector<Tuple> all_singles() {
  std::vector<Tuple> out;
  for (int a = 0; a <= kExhaustiveCarrier; ++a) {
    for (int b = 0; b <= kExhaustiveCarrier; ++b) {
      for (const auto& f : maps_of(a, b)) out.push_back({f});
    }
  }
  return out;
}

std::vector<Tuple> all_spans() {
  std::vector<Tuple> out;
  for (int a = 0; a <= kExhaustiveCarrier; ++a) {
    for (int b = 0; b <= kExhaustiveCarrier; ++b) {
      for (int c = 0; c <= kExhaustiveCarrier; ++c) {
        for (const auto& f : maps_of(a, b)) {
          for (const auto& g : maps_of(a, c)) out.push_back({f, g});
        }
      }
    }
  }
  return out;
}

std::vector<Tuple> all_chains() {
  std::vector<Tuple> out;
  for (int a = 0; a <= kExhaustiveCarrier; ++a) {
    for (int b = 0; b <= kExhaustiveCarrier; ++b) {
      for (int c = 0; c <= kExhaustiveCarrier; ++c) {
        for (const auto& f : maps_of(a, b)) {
          for (const auto& g : maps_of(b, c)) out.push_back({f, g});
        }
      }
    }
  }
  return out;
}

}  // namespace iterlab::laws
