#include <set>

#include "iterlab/wand.hpp"
#include "laws.hpp"

namespace iterlab::laws {

namespace {

int carrier(const SizeBounds& b) { return std::min(b.max_size, 4); }

FinObj dj_obj(Rng& r, const SizeBounds& b) { return gen_obj(r, carrier(b)); }

// Nonzero generators on pairwise disjoint domains, dealt out to `count` DJ maps
// A -> cods[i].
std::vector<DjMap> dj_family(Rng& r, const FinObj& a, const std::vector<FinObj>& cods, int max_gens) {
  std::vector<int> sizes;
  int total = 0;
  for (std::size_t i = 0; i < cods.size(); ++i) {
    sizes.push_back(r.range(0, max_gens));
    total += sizes.back();
  }
  auto parts = gen_disjoint_family(r, a, FinObj(1), total);
  std::vector<DjMap> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < cods.size(); ++i) {
    std::vector<PartialMap> gens;
    for (int k = 0; k < sizes[i]; ++k) {
      PartialMap g = compose(restriction(parts[next++]), gen_partial_map(r, a, cods[i], 1.0));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    out.emplace_back(a, cods[i], std::move(gens));
  }
  return out;
}

DjMap dj_one(Rng& r, const FinObj& a, const FinObj& b, int max_gens) { return dj_family(r, a, {b}, max_gens)[0]; }

// Restrict every generator to a random subset, dropping those that vanish.
DjMap shrink(Rng& r, const DjMap& s) {
  std::vector<PartialMap> gens;
  for (const auto& g : s.gens()) {
    PartialMap h = compose(idem(r, s.dom()), g);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return DjMap(s.dom(), s.cod(), std::move(gens));
}

// The down-set of a generator set, enumerated: every restriction of every generator.
std::set<PartialMap> down_set(const DjMap& s) {
  std::set<PartialMap> out{PartialMap::zero(s.dom(), s.cod())};
  for (const auto& g : s.gens()) {
    const std::uint64_t sup = g.support();
    for (std::uint64_t m = sup;; m = (m - 1) & sup) {
      out.insert(compose(PartialMap::idempotent(s.dom(), m), g));
      if (m == 0) break;
    }
  }
  return out;
}

}  // namespace

std::vector<Law> dj_laws() {
  std::vector<Law> out;
  out.push_back({"dj.R", {}, "the restriction axioms hold in the disjoint-join completion, and <= is the restriction order",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = dj_obj(r, b), x = dj_obj(r, b), c = dj_obj(r, b);
                   const DjMap s = dj_one(r, a, x, b.max_gens), t = dj_one(r, a, c, b.max_gens);
                   const DjMap u = dj_one(r, x, c, b.max_gens), s2 = dj_one(r, a, x, b.max_gens);
                   v.input("S", s);
                   v.input("T", t);
                   v.input("U", u);
                   v.input("S'", s2);
                   v.equal("R.1", dj_compose(dj_restriction(s), s), s);
                   v.equal("R.2", dj_compose(dj_restriction(s), dj_restriction(t)),
                           dj_compose(dj_restriction(t), dj_restriction(s)));
                   v.equal("R.3", dj_restriction(dj_compose(dj_restriction(t), s)),
                           dj_compose(dj_restriction(t), dj_restriction(s)));
                   v.equal("R.4", dj_compose(s, dj_restriction(u)), dj_compose(dj_restriction(dj_compose(s, u)), s));
                   v.check("<= agrees with rS T = S", dj_leq(s, s2) == (dj_compose(dj_restriction(s), s2) == s));
                   v.check("shrunk map is below", dj_leq(shrink(r, s), s));
                 }});
  out.push_back({"dj.perp", {}, "perp.0 to perp.5 hold in the disjoint-join completion",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a0 = dj_obj(r, b), a = dj_obj(r, b), x = dj_obj(r, b), c = dj_obj(r, b);
                   auto fam = dj_family(r, a, {x, c}, b.max_gens);
                   const DjMap &s = fam[0], &t = fam[1];
                   const DjMap any = dj_one(r, a, x, b.max_gens);
                   const DjMap h = dj_one(r, a0, a, b.max_gens), k = dj_one(r, x, x, b.max_gens),
                               k2 = dj_one(r, c, a0, b.max_gens);
                   v.input("S", s);
                   v.input("T", t);
                   v.input("P", any);
                   v.input("H", h);
                   v.input("K", k);
                   v.input("K'", k2);
                   v.check("perp.0", dj_perp(DjMap::identity(a), DjMap::zero(a, c)));
                   v.check("perp.1", dj_perp(t, s) && dj_perp(any, t) == dj_perp(t, any));
                   v.check("perp.2", dj_perp(any, any) == any.is_zero());
                   v.check("perp.3", dj_perp(shrink(r, s), shrink(r, t)));
                   v.check("perp.4", dj_perp(dj_compose(dj_compose(h, s), k), dj_compose(dj_compose(h, t), k2)));
                   v.check("perp.5", dj_perp(dj_restriction(s), dj_restriction(t)));
                 }});
  out.push_back({"dj.join", {}, "join.1 to join.4 hold in the disjoint-join completion, joins being unions",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a0 = dj_obj(r, b), a = dj_obj(r, b), x = dj_obj(r, b), c = dj_obj(r, b);
                   const int k = r.range(0, 3);
                   std::vector<FinObj> cods(static_cast<std::size_t>(k), x);
                   cods.push_back(c);
                   auto fam = dj_family(r, a, cods, b.max_gens);
                   const DjMap t = fam.back();
                   fam.pop_back();
                   const DjMap joined = dj_join(fam, a, x);
                   const DjMap h = dj_one(r, a0, a, b.max_gens);
                   for (std::size_t i = 0; i < fam.size(); ++i) v.input("S" + std::to_string(i), fam[i]);
                   v.input("T", t);
                   v.input("H", h);
                   std::size_t gens = 0;
                   for (const auto& s : fam) {
                     gens += s.gens().size();
                     v.check("join.1", dj_leq(s, joined));
                   }
                   v.check("join is the union", joined.gens().size() == gens);
                   const DjMap bound = dj_embed(dj_flatten(joined));
                   v.check("join.2", dj_leq(joined, bound));
                   std::vector<DjMap> pre;
                   for (const auto& s : fam) pre.push_back(dj_compose(h, s));
                   v.equal("join.3", dj_compose(h, joined), dj_join(pre, a0, x));
                   v.check("join.4", dj_perp(joined, t));
                 }});
  out.push_back({"dj.embed", {}, "the embedding is a faithful restriction functor preserving zero, order and disjointness",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = dj_obj(r, b), x = dj_obj(r, b), c = dj_obj(r, b);
                   const PartialMap f = gen_partial_map(r, a, x), f2 = gen_partial_map(r, a, x);
                   const PartialMap g = gen_partial_map(r, x, c), p = gen_partial_map(r, a, c);
                   v.input("f", f);
                   v.input("f'", f2);
                   v.input("g", g);
                   v.input("p", p);
                   v.check("faithful", (dj_embed(f) == dj_embed(f2)) == (f == f2));
                   v.equal("composition", dj_embed(compose(f, g)), dj_compose(dj_embed(f), dj_embed(g)));
                   v.equal("identity", dj_embed(identity(a)), DjMap::identity(a));
                   v.equal("restriction", dj_embed(restriction(f)), dj_restriction(dj_embed(f)));
                   v.equal("zero", dj_embed(zero(a, x)), DjMap::zero(a, x));
                   v.check("order", leq(f, f2) == dj_leq(dj_embed(f), dj_embed(f2)));
                   v.check("disjointness", perp(rel0(), f, p) == dj_perp(dj_embed(f), dj_embed(p)));
                   v.equal("flatten after embed", dj_flatten(dj_embed(f)), f);
                 }});
  out.push_back({"dj.canonicity", {}, "two generator sets have the same down-set iff they are equal",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = dj_obj(r, b), x = dj_obj(r, b);
                   const DjMap s = dj_one(r, a, x, b.max_gens);
                   DjMap t;
                   switch (r.below_int(4)) {
                     case 0: {
                       std::vector<PartialMap> gens(s.gens().rbegin(), s.gens().rend());
                       t = DjMap(a, x, gens);
                       break;
                     }
                     case 1:
                       t = shrink(r, s);
                       break;
                     case 2: {
                       // Split one generator in two.
                       std::vector<PartialMap> gens = s.gens();
                       if (!gens.empty()) {
                         const PartialMap g = gens.back();
                         gens.pop_back();
                         const PartialMap e = idem(r, a);
                         for (const PartialMap& part : {compose(e, g), compose(complement(e), g)}) {
                           if (!part.is_zero()) gens.push_back(part);
                         }
                       }
                       t = DjMap(a, x, gens);
                       break;
                     }
                     default:
                       t = dj_one(r, a, x, b.max_gens);
                   }
                   v.input("F", s);
                   v.input("G", t);
                   const bool same_down = down_set(s) == down_set(t);
                   v.check("down-sets equal iff generator sets equal", same_down == (s == t));
                   v.check("mutual <= iff equal", (dj_leq(s, t) && dj_leq(t, s)) == (s == t));
                 }});
  out.push_back({"dj.wand", {}, "the generator-set wand satisfies iteration and flattens to the wand of the flattenings",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = dj_obj(r, b), a = dj_obj(r, b);
                   auto fam = dj_family(r, x, {x, a}, b.max_gens);
                   const DjMap &s = fam[0], &t = fam[1];
                   v.input("F", s);
                   v.input("G", t);
                   const DjMap w = dj_wand(s, t);
                   v.equal("G join F(F wand G) = F wand G", dj_join(t, dj_compose(s, w)), w);
                   v.equal("flatten", dj_flatten(w), h.w(dj_flatten(s), dj_flatten(t)));
                 }});
  return out;
}

}  // namespace iterlab::laws
