#include "iterlab/oracle.hpp"

#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/wand.hpp"

namespace iterlab {

std::optional<int> step_simulate(const PartialMap& f, const PartialMap& g, int x) {
  require_disjoint(f, g, InterferenceRel::maximal(), "step_simulate");
  if (!f.is_endo()) throw ShapeError("step_simulate: f must be an endomorphism");
  std::vector<bool> visited(static_cast<std::size_t>(f.dom().size()), false);
  int y = x;
  while (true) {
    if (auto out = g(y)) return out;
    auto next = f(y);
    if (!next || visited[static_cast<std::size_t>(y)]) return std::nullopt;
    visited[static_cast<std::size_t>(y)] = true;
    y = *next;
  }
}

PartialMap step_simulate_map(const PartialMap& f, const PartialMap& g) {
  std::vector<int> t;
  for (int x = 0; x < f.dom().size(); ++x) t.push_back(step_simulate(f, g, x).value_or(kUndef));
  return PartialMap(f.dom(), g.cod(), std::move(t));
}

Matrix trace_by_simulation(const Matrix& g, std::size_t cut) {
  if (cut > g.rows() || cut > g.cols()) throw ShapeError("trace_by_simulation: cut exceeds the matrix");
  const PartialMap flat = flatten(g);
  const int loop = total_size(slice(g.dom(), 0, cut));
  const MatObj a = slice(g.dom(), cut, g.rows());
  const MatObj b = slice(g.cod(), cut, g.cols());
  std::vector<int> t;
  for (int p = loop; p < flat.dom().size(); ++p) {
    std::optional<int> y = flat(p);
    std::vector<bool> seen(static_cast<std::size_t>(loop), false);
    while (y && *y < loop) {
      if (seen[static_cast<std::size_t>(*y)]) {
        y.reset();
        break;
      }
      seen[static_cast<std::size_t>(*y)] = true;
      y = flat(*y);
    }
    t.push_back(y ? *y - loop : kUndef);
  }
  return unflatten(PartialMap(FinObj(total_size(a)), FinObj(total_size(b)), std::move(t)), a, b);
}

std::uint64_t disjoint_pair_count(int x_size, int a_size) {
  std::uint64_t n = 1;
  for (int i = 0; i < x_size; ++i) n *= static_cast<std::uint64_t>(x_size + a_size + 1);
  return n;
}

void for_each_disjoint_pair(int x_size, int a_size,
                            const std::function<void(const PartialMap&, const PartialMap&)>& visit) {
  if (x_size < 0 || a_size < 0 || x_size > kEnumMaxX || a_size > kEnumMaxA) {
    throw CapacityError("enumerate_all: sizes limited to |X| <= " + std::to_string(kEnumMaxX) + ", |A| <= " +
                        std::to_string(kEnumMaxA) + " (got " + std::to_string(x_size) + ", " +
                        std::to_string(a_size) + ")");
  }
  // Each point picks one of: nowhere, f -> 0..X-1, g -> 0..A-1.
  const FinObj x(x_size), a(a_size);
  const int choices = x_size + a_size + 1;
  std::vector<int> digit(static_cast<std::size_t>(x_size), 0);
  while (true) {
    std::vector<int> ft(digit.size(), kUndef), gt(digit.size(), kUndef);
    for (std::size_t p = 0; p < digit.size(); ++p) {
      const int d = digit[p];
      if (d >= 1 && d <= x_size) ft[p] = d - 1;
      if (d > x_size) gt[p] = d - 1 - x_size;
    }
    visit(PartialMap(x, x, std::move(ft)), PartialMap(x, a, std::move(gt)));
    int i = x_size - 1;
    while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == choices) digit[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
}

std::vector<std::pair<PartialMap, PartialMap>> enumerate_all(int x_size, int a_size) {
  std::vector<std::pair<PartialMap, PartialMap>> out;
  for_each_disjoint_pair(x_size, a_size, [&](const PartialMap& f, const PartialMap& g) { out.emplace_back(f, g); });
  return out;
}

}  // namespace iterlab
