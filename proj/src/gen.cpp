#include "iterlab/gen.hpp"

#include "iterlab/errors.hpp"

namespace iterlab {

FinObj gen_obj(Rng& rng, int max_size, int min_size) { return FinObj(rng.range(min_size, max_size)); }

double gen_density(Rng& rng) { return static_cast<double>(rng.below_int(5)) / 4.0; }

PartialMap gen_partial_map(Rng& rng, const FinObj& dom, const FinObj& cod, double density) {
  std::vector<int> t(static_cast<std::size_t>(dom.size()), kUndef);
  if (cod.size() > 0) {
    for (auto& y : t) {
      if (rng.unit() < density) y = rng.below_int(cod.size());
    }
  }
  return PartialMap(dom, cod, std::move(t));
}

PartialMap gen_partial_map(Rng& rng, const FinObj& dom, const FinObj& cod) {
  const double d = gen_density(rng);
  return gen_partial_map(rng, dom, cod, d);
}

PartialMap gen_total_map(Rng& rng, const FinObj& dom, const FinObj& cod) {
  if (cod.size() == 0 && dom.size() > 0) throw PreconditionError("no total map into an empty object");
  return gen_partial_map(rng, dom, cod, 1.0);
}

std::uint64_t gen_mask(Rng& rng, int size) {
  if (size >= 64) return rng.next();
  return rng.next() & ((std::uint64_t{1} << size) - 1);
}

PartialMap gen_idempotent(Rng& rng, const FinObj& obj) { return PartialMap::idempotent(obj, gen_mask(rng, obj.size())); }

std::vector<PartialMap> gen_disjoint_family(Rng& rng, const FinObj& dom, const FinObj& cod, int k) {
  std::vector<std::vector<int>> tables(static_cast<std::size_t>(k),
                                       std::vector<int>(static_cast<std::size_t>(dom.size()), kUndef));
  if (k > 0 && cod.size() > 0) {
    const double d = gen_density(rng);
    for (int x = 0; x < dom.size(); ++x) {
      if (rng.unit() < d) tables[static_cast<std::size_t>(rng.below_int(k))][static_cast<std::size_t>(x)] =
          rng.below_int(cod.size());
    }
  }
  std::vector<PartialMap> out;
  for (auto& t : tables) out.emplace_back(dom, cod, std::move(t));
  return out;
}

std::pair<PartialMap, PartialMap> gen_disjoint_pair(Rng& rng, const FinObj& x, const FinObj& a) {
  std::vector<int> f(static_cast<std::size_t>(x.size()), kUndef), g = f;
  for (int p = 0; p < x.size(); ++p) {
    switch (rng.below_int(3)) {
      case 0:
        if (x.size() > 0) f[static_cast<std::size_t>(p)] = rng.below_int(x.size());
        break;
      case 1:
        if (a.size() > 0) g[static_cast<std::size_t>(p)] = rng.below_int(a.size());
        break;
      default:
        break;
    }
  }
  return {PartialMap(x, x, std::move(f)), PartialMap(x, a, std::move(g))};
}

std::optional<PartialMap> solve_through(Rng& rng, const PartialMap& target, const PartialMap& via,
                                        std::uint64_t forbid) {
  if (!(target.cod() == via.cod())) {
    throw ShapeError("solve_through: target lands in " + target.cod().describe() + " but via lands in " +
                     via.cod().describe());
  }
  const FinObj& mid = via.dom();
  std::vector<int> escape;
  for (int y = 0; y < mid.size(); ++y) {
    if (!via.defined_at(y)) escape.push_back(y);
  }
  std::vector<int> t(static_cast<std::size_t>(target.dom().size()), kUndef);
  for (int x = 0; x < target.dom().size(); ++x) {
    if (auto z = target(x)) {
      std::vector<int> fibre;
      for (int y = 0; y < mid.size(); ++y) {
        if (via(y) == z) fibre.push_back(y);
      }
      if (fibre.empty()) return std::nullopt;
      t[static_cast<std::size_t>(x)] = fibre[rng.below(fibre.size())];
    } else if (!((forbid >> x) & 1U) && !escape.empty() && rng.coin()) {
      t[static_cast<std::size_t>(x)] = escape[rng.below(escape.size())];
    }
  }
  return PartialMap(target.dom(), mid, std::move(t));
}

MatObj gen_matobj(Rng& rng, int max_parts, int max_size, int min_parts) {
  MatObj out;
  const int n = rng.range(min_parts, max_parts);
  for (int i = 0; i < n; ++i) out.push_back(gen_obj(rng, max_size));
  return out;
}

Matrix gen_matrix(Rng& rng, const MatObj& dom, const MatObj& cod, double density) {
  const FinObj fd(total_size(dom)), fc(total_size(cod));
  return unflatten(gen_partial_map(rng, fd, fc, density), dom, cod);
}

Matrix gen_matrix(Rng& rng, const MatObj& dom, const MatObj& cod) {
  const double d = gen_density(rng);
  return gen_matrix(rng, dom, cod, d);
}

std::vector<Matrix> gen_disjoint_matrices(Rng& rng, const MatObj& dom, const MatObj& cod, int k) {
  const FinObj fd(total_size(dom)), fc(total_size(cod));
  std::vector<Matrix> out;
  for (const auto& f : gen_disjoint_family(rng, fd, fc, k)) out.push_back(unflatten(f, dom, cod));
  return out;
}

DjMap gen_dj(Rng& rng, const FinObj& dom, const FinObj& cod, int max_gens) {
  auto fam = gen_disjoint_family(rng, dom, cod, rng.range(0, max_gens));
  std::vector<PartialMap> gens;
  for (auto& f : fam) {
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return DjMap(dom, cod, std::move(gens));
}

std::vector<PartialMap> all_maps(const FinObj& dom, const FinObj& cod) {
  std::vector<PartialMap> out;
  const int n = dom.size(), base = cod.size() + 1;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> t(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) t[i] = digits[i] - 1;
    out.emplace_back(dom, cod, std::move(t));
    int i = n - 1;
    while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == base) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace iterlab
