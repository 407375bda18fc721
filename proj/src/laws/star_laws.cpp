#include "iterlab/oracle.hpp"
#include "laws.hpp"

namespace iterlab::laws {

namespace {

void relcomp1(const Tuple& t, const Hooks&, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.check("g \\ f perp f", perp(rel0(), relative_complement(f, g), f));
}

void relcomp2(const Tuple& t, const Hooks&, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("(g \\ f) join f = g", join(relative_complement(f, g), f), g);
}

void complement_check(const Tuple& t, const Hooks&, Verdict& v) {
  const auto& e = t[0];
  v.input("e", e);
  const PartialMap c = complement(e);
  v.check("e^c is a restriction idempotent", c.is_rest_idem());
  v.check("e perp e^c", perp(rel0(), e, c));
  v.equal("e join e^c = 1", join(e, c), identity(e.dom()));
  v.equal("e^c = 1 \\ e", c, relative_complement(e, identity(e.dom())));
}

void star1(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto& f = t[0];
  v.input("f", f);
  const PartialMap s = h.star(f);
  v.equal("rf^c join f f* = f*", join(complement(restriction(f)), compose(f, s)), s);
}

void star2(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto &k = t[0], &f = t[1];
  v.input("h", k);
  v.input("f", f);
  v.equal("(hf)* h = h (fh)* rf^c", compose(h.star(compose(k, f)), k),
          compose({k, h.star(compose(f, k)), complement(restriction(f))}));
}

void star3(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("(f join g)* = (f* g)* f*", h.star(join(f, g)), compose(h.star(compose(h.star(f), g)), h.star(f)));
}

void star_formula(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto& f = t[0];
  v.input("f", f);
  const PartialMap c = complement(restriction(f));
  const PartialMap s = h.star(f);
  std::vector<PartialMap> terms;
  for (int n = 0; n <= f.dom().size(); ++n) terms.push_back(compose(power(f, n), c));
  v.equal("f* = join f^n rf^c", s, join(rel0(), terms, f.dom(), f.dom()));
  v.equal("f* = step simulation to the first point outside dom f", s, step_simulate_map(f, c));
}

void wand_star_wand(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("star_to_wand(wand_to_star(wand)) = wand", star_to_wand([&h](const PartialMap& e) { return h.star(e); }, f, g),
          h.w(f, g));
}

void star_wand_star(const Tuple& t, const Hooks& h, Verdict& v) {
  const auto& f = t[0];
  v.input("f", f);
  const StarFn star = [&h](const PartialMap& e) { return h.star(e); };
  const WandFn wand = [&star](const PartialMap& a, const PartialMap& b) { return star_to_wand(star, a, b); };
  v.equal("wand_to_star(star_to_wand(star)) = star", wand_to_star(wand, f), h.star(f));
}

// Inputs on the 3-point set.
std::vector<Tuple> below_pairs() {
  std::vector<Tuple> out;
  const FinObj x(3);
  for (const auto& g : endos(3)) {
    for (std::uint64_t m = 0; m < 8; ++m) out.push_back({compose(PartialMap::idempotent(x, m), g), g});
  }
  return out;
}

std::vector<Tuple> idempotents() {
  std::vector<Tuple> out;
  for (int n = 0; n <= kExhaustiveCarrier; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back({PartialMap::idempotent(FinObj(n), m)});
  }
  return out;
}

std::vector<Tuple> single_endos() {
  std::vector<Tuple> out;
  for (const auto& f : endos(3)) out.push_back({f});
  return out;
}

std::vector<Tuple> endo_pairs() {
  std::vector<Tuple> out;
  for (const auto& h : endos(3)) {
    for (const auto& f : endos(3)) out.push_back({h, f});
  }
  return out;
}

std::vector<Tuple> disjoint_endo_pairs() {
  std::vector<Tuple> out;
  for (const auto& f : endos(3)) {
    for (const auto& g : endos(3)) {
      if (perp(rel0(), f, g)) out.push_back({f, g});
    }
  }
  return out;
}

std::vector<Tuple> guard_pairs() {
  std::vector<Tuple> out;
  for (auto& [f, g] : enumerate_all(kEnumMaxX, kEnumMaxA)) out.push_back({f, g});
  return out;
}

Law law(std::string id, std::vector<std::string> aliases, std::string statement, TupleCheck check,
        std::function<Tuple(Rng&, const SizeBounds&)> gen, std::function<std::vector<Tuple>()> all,
        std::string all_text) {
  Law l;
  l.id = std::move(id);
  l.aliases = std::move(aliases);
  l.statement = std::move(statement);
  l.sample = [check, gen](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) { check(gen(r, b), h, v); };
  l.exhaustive = [check, all, all_text](const SizeBounds&) { return tuple_plan(all(), check, all_text); };
  return l;
}

Tuple gen_below(Rng& r, const SizeBounds& b) {
  const FinObj a = obj(r, b), x = obj(r, b);
  const PartialMap g = gen_partial_map(r, a, x);
  return {compose(idem(r, a), g), g};
}

Tuple gen_endo(Rng& r, const SizeBounds& b) {
  const FinObj x = obj(r, b);
  return {gen_partial_map(r, x, x)};
}

}  // namespace

std::vector<Law> star_laws() {
  std::vector<Law> out;
  out.push_back(law("relcomp.1", {"\\.1"}, "g \\ f is disjoint from f", relcomp1, gen_below, below_pairs,
                    "f <= g on the 3-point set"));
  out.push_back(law("relcomp.2", {"\\.2"}, "(g \\ f) join f = g", relcomp2, gen_below, below_pairs,
                    "f <= g on the 3-point set"));
  out.push_back(law(
      "complement", {}, "e^c is the restriction idempotent with e perp e^c and e join e^c = 1", complement_check,
      [](Rng& r, const SizeBounds& b) { return Tuple{idem(r, obj(r, b))}; }, idempotents,
      "all subsets of carriers of size <= 3"));
  out.push_back(law("star.1", {"⋆.1"}, "rf^c join f f* = f*", star1, gen_endo, single_endos,
                    "all endomorphisms of the 3-point set"));
  out.push_back(law(
      "star.2", {"⋆.2"}, "(hf)* h = h (fh)* rf^c for h: A -> B, f: B -> A", star2,
      [](Rng& r, const SizeBounds& b) {
        const FinObj a = obj(r, b), x = obj(r, b);
        return Tuple{gen_partial_map(r, a, x), gen_partial_map(r, x, a)};
      },
      endo_pairs, "all pairs of maps between 3-point sets"));
  out.push_back(law(
      "star.3", {"⋆.3"}, "f perp g implies (f join g)* = (f* g)* f*", star3,
      [](Rng& r, const SizeBounds& b) {
        const FinObj x = obj(r, b);
        auto fam = gen_disjoint_family(r, x, x, 2);
        return Tuple{fam[0], fam[1]};
      },
      disjoint_endo_pairs, "all disjoint endomorphism pairs of the 3-point set"));
  out.push_back(law("star.formula", {}, "f* = join of f^n rf^c, the run of f until it leaves its domain", star_formula,
                    gen_endo, single_endos, "all endomorphisms of the 3-point set"));
  out.push_back(law(
      "star.roundtrip-wand", {}, "wand -> star -> wand returns the wand", wand_star_wand,
      [](Rng& r, const SizeBounds& b) {
        const FinObj x = obj(r, b), a = obj(r, b);
        auto [f, g] = gen_disjoint_pair(r, x, a);
        return Tuple{f, g};
      },
      guard_pairs, "all disjoint pairs with |X| = 3, |A| = 2"));
  out.push_back(law("star.roundtrip-star", {}, "star -> wand -> star returns the star", star_wand_star, gen_endo,
                    single_endos, "all endomorphisms of the 3-point set"));
  return out;
}

}  // namespace iterlab::laws
