#include "laws.hpp"

namespace iterlab::laws {

namespace {

struct Family {
  FinObj a, b;
  std::vector<PartialMap> members;
  PartialMap joined;
};

// Pairwise disjoint family of up to max_family maps A -> B, and its join.
Family family(Rng& r, const SizeBounds& b) {
  Family fam{obj(r, b), obj(r, b), {}, {}};
  fam.members = gen_disjoint_family(r, fam.a, fam.b, r.range(0, b.max_family));
  fam.joined = join(rel0(), fam.members, fam.a, fam.b);
  return fam;
}

void record(Verdict& v, const Family& fam) {
  v.input("family", fam.members);
  v.input("join", fam.joined);
}

}  // namespace

std::vector<Law> join_laws() {
  std::vector<Law> out;
  out.push_back({"join.1", {"⊔.1"}, "every member is below the join",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const Family fam = family(r, b);
                   record(v, fam);
                   for (const auto& f : fam.members) v.check("f_i <= join", leq(f, fam.joined));
                 }});
  out.push_back({"join.2", {"⊔.2"}, "the join is below every upper bound",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const Family fam = family(r, b);
                   record(v, fam);
                   // An upper bound built by extending the join off its domain, and an arbitrary map.
                   PartialMap extra = gen_partial_map(r, fam.a, fam.b);
                   extra = compose(complement(restriction(fam.joined)), extra);
                   const PartialMap bound = join(fam.joined, extra);
                   const PartialMap any = gen_partial_map(r, fam.a, fam.b);
                   v.input("bound", bound);
                   v.input("any", any);
                   for (const PartialMap* h : {&bound, &any}) {
                     bool upper = true;
                     for (const auto& f : fam.members) upper = upper && leq(f, *h);
                     if (upper) v.check("join <= upper bound", leq(fam.joined, *h));
                   }
                   v.check("constructed bound is an upper bound", leq(fam.joined, bound));
                 }});
  out.push_back({"join.3", {"⊔.3"}, "h (join f_i) = join (h f_i)",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const Family fam = family(r, b);
                   const FinObj a0 = obj(r, b);
                   const PartialMap h = gen_partial_map(r, a0, fam.a);
                   record(v, fam);
                   v.input("h", h);
                   std::vector<PartialMap> pre;
                   for (const auto& f : fam.members) pre.push_back(compose(h, f));
                   v.equal("h join = join h", compose(h, fam.joined), join(rel0(), pre, a0, fam.b));
                 }});
  out.push_back({"join.4", {"⊔.4"}, "joins are strong: a map disjoint from every member is disjoint from the join",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   // Members and h share one partition of A, h landing in its own codomain.
                   const int k = r.range(0, b.max_family);
                   auto fam = gen_disjoint_family(r, a, x, k + 1);
                   const PartialMap h = compose(restriction(fam.back()), gen_total_map(r, a, c.size() ? c : FinObj(1)));
                   fam.pop_back();
                   const PartialMap any = gen_partial_map(r, a, c);
                   const PartialMap joined = join(rel0(), fam, a, x);
                   v.input("family", fam);
                   v.input("h", h);
                   v.input("any", any);
                   v.check("strong for a disjoint h", is_strong_join(rel0(), fam, h, a, x));
                   bool all = true;
                   for (const auto& f : fam) all = all && perp(rel0(), f, any);
                   if (all) v.check("strong for an arbitrary h", perp(rel0(), joined, any));
                   // Under perp_delta a family has at most one nonzero member.
                   std::vector<PartialMap> dfam;
                   for (std::size_t i = 0; i < fam.size(); ++i) dfam.push_back(i == 0 ? fam[0] : zero(a, x));
                   bool dall = true;
                   for (const auto& f : dfam) dall = dall && perp(reld(), f, any);
                   if (dall) v.check("strong under perp_delta", perp(reld(), join(reld(), dfam, a, x), any));
                 }});
  out.push_back({"join.consequences", {},
                 "r(f_j) join = f_j; r(join) = join of restrictions; k join k' = join k f_i k'; join perp h "
                 "implies f_j perp h",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const Family fam = family(r, b);
                   const FinObj a0 = obj(r, b), c = obj(r, b), y = obj(r, b);
                   const PartialMap k = gen_partial_map(r, a0, fam.a), k2 = gen_partial_map(r, fam.b, y);
                   const PartialMap h = gen_partial_map(r, fam.a, c);
                   record(v, fam);
                   v.input("k", k);
                   v.input("k'", k2);
                   v.input("h", h);
                   std::vector<PartialMap> rs, sandwiched;
                   for (const auto& f : fam.members) {
                     v.equal("r(f_j) join = f_j", compose(restriction(f), fam.joined), f);
                     rs.push_back(restriction(f));
                     sandwiched.push_back(compose({k, f, k2}));
                   }
                   v.equal("r(join) = join r", restriction(fam.joined), join(rel0(), rs, fam.a, fam.a));
                   v.equal("k join k' = join k f k'", compose({k, fam.joined, k2}), join(rel0(), sandwiched, a0, y));
                   if (perp(rel0(), fam.joined, h)) {
                     for (const auto& f : fam.members) v.check("f_j perp h", perp(rel0(), f, h));
                   }
                 }});
  out.push_back({"join.strong-search", {},
                 "exhaustive search on one object finds no non-strong join of at most four members",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const int n = r.range(0, std::min(b.max_size, 4));
                   v.input("n", std::int64_t{n});
                   v.check("perp_0 joins strong", !find_non_strong_join(rel0(), n, b.max_family).has_value());
                   v.check("perp_delta joins strong", !find_non_strong_join(reld(), n, b.max_family).has_value());
                 }});
  return out;
}

}  // namespace iterlab::laws
