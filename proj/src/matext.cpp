#include "iterlab/matext.hpp"

namespace iterlab {

std::vector<int> part_offsets(const MatObj& obj) {
  std::vector<int> off{0};
  for (const auto& o : obj) off.push_back(off.back() + o.size());
  return off;
}

PartialMap flatten(const Matrix& f) {
  auto ro = part_offsets(f.dom());
  auto co = part_offsets(f.cod());
  std::vector<int> t(static_cast<std::size_t>(ro.back()), kUndef);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const auto& e = f.at(i, j).table();
      for (std::size_t x = 0; x < e.size(); ++x) {
        if (e[x] != kUndef) t[static_cast<std::size_t>(ro[i]) + x] = co[j] + e[x];
      }
    }
  }
  return PartialMap(FinObj(ro.back()), FinObj(co.back()), std::move(t));
}

Matrix unflatten(const PartialMap& f, const MatObj& dom, const MatObj& cod) {
  auto ro = part_offsets(dom);
  auto co = part_offsets(cod);
  if (f.dom().size() != ro.back() || f.cod().size() != co.back()) {
    throw ShapeError("unflatten: map " + f.dom().describe() + " -> " + f.cod().describe() + " does not fit " +
                     describe(dom) + " -> " + describe(cod));
  }
  std::vector<PartialMap> e;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < cod.size(); ++j) {
      std::vector<int> t(static_cast<std::size_t>(dom[i].size()), kUndef);
      for (int x = 0; x < dom[i].size(); ++x) {
        const int y = f.table()[static_cast<std::size_t>(ro[i] + x)];
        if (y != kUndef && y >= co[j] && y < co[j + 1]) t[static_cast<std::size_t>(x)] = y - co[j];
      }
      e.emplace_back(dom[i], cod[j], std::move(t));
    }
  }
  return Matrix(dom, cod, std::move(e), Matrix::Unchecked{});
}

std::optional<Matrix> restriction_inverse(const Matrix& m) {
  PartialMap f = flatten(m);
  std::vector<int> inv(static_cast<std::size_t>(f.cod().size()), kUndef);
  for (int x = 0; x < f.dom().size(); ++x) {
    const int y = f.table()[static_cast<std::size_t>(x)];
    if (y == kUndef) continue;
    if (inv[static_cast<std::size_t>(y)] != kUndef) return std::nullopt;
    inv[static_cast<std::size_t>(y)] = x;
  }
  return unflatten(PartialMap(f.cod(), f.dom(), std::move(inv)), m.cod(), m.dom());
}

}  // namespace iterlab
