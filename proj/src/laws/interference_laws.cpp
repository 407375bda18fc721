#include "laws.hpp"

namespace iterlab::laws {

namespace {

using Mask = InterferenceRel::Mask;

// f: A -> B and g: A -> C related by rel, by construction.
std::pair<PartialMap, PartialMap> related_pair(Rng& r, const InterferenceRel& rel, const FinObj& a, const FinObj& b,
                                               const FinObj& c) {
  if (rel.kind() == RelKind::minimal) {
    PartialMap f = gen_partial_map(r, a, b), g = gen_partial_map(r, a, c);
    if (r.coin()) return {zero(a, b), g};
    return {f, zero(a, c)};
  }
  std::vector<int> ft(static_cast<std::size_t>(a.size()), kUndef), gt = ft;
  for (int x = 0; x < a.size(); ++x) {
    const int side = r.below_int(3);
    if (side == 0 && b.size() > 0) ft[static_cast<std::size_t>(x)] = r.below_int(b.size());
    if (side == 1 && c.size() > 0) gt[static_cast<std::size_t>(x)] = r.below_int(c.size());
  }
  return {PartialMap(a, b, std::move(ft)), PartialMap(a, c, std::move(gt))};
}

std::pair<Mask, Mask> related_masks(Rng& r, const InterferenceRel& rel, int n) {
  if (rel.kind() == RelKind::minimal) {
    const auto m = static_cast<Mask>(gen_mask(r, n));
    return r.coin() ? std::pair<Mask, Mask>{m, 0} : std::pair<Mask, Mask>{0, m};
  }
  Mask a = 0, b = 0;
  for (int x = 0; x < n; ++x) {
    const int side = r.below_int(3);
    if (side == 0) a |= Mask{1} << x;
    if (side == 1) b |= Mask{1} << x;
  }
  return {a, b};
}

Mask preimage(const PartialMap& h, Mask m) {
  Mask out = 0;
  for (int x = 0; x < h.dom().size(); ++x) {
    if (auto y = h(x); y && ((m >> *y) & 1U)) out |= Mask{1} << x;
  }
  return out;
}

// Each case checks both the maximal and the minimal relation.
using RelCase = std::function<void(Rng&, const SizeBounds&, const InterferenceRel&, Verdict&)>;

CaseFn both(RelCase body) {
  return [body = std::move(body)](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
    Rng r2 = r.split();
    v.input("relation", std::string("perp_0"));
    body(r, b, rel0(), v);
    if (v.failed()) return;
    v.input("relation", std::string("perp_delta"));
    body(r2, b, reld(), v);
  };
}

int small(Rng& r, const SizeBounds& b) { return r.range(0, std::min(b.max_size, InterferenceRel::kMaxCustomSize)); }

}  // namespace

std::vector<Law> interference_laws() {
  std::vector<Law> out;
  out.push_back({"perp.0", {"⊥.0"}, "1_A is disjoint from 0",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), c = obj(r, b);
                   v.check("1 perp 0", perp(rel, identity(a), zero(a, c)));
                 })});
  out.push_back({"perp.1", {"⊥.1"}, "disjointness is symmetric",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   auto [f, g] = related_pair(r, rel, a, x, c);
                   const PartialMap p = gen_partial_map(r, a, x), q = gen_partial_map(r, a, c);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("p", p);
                   v.input("q", q);
                   v.check("f perp g implies g perp f", perp(rel, g, f));
                   v.check("symmetric on arbitrary maps", perp(rel, p, q) == perp(rel, q, p));
                 })});
  out.push_back({"perp.2", {"⊥.2"}, "a map disjoint from itself is zero",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b);
                   const PartialMap f = gen_partial_map(r, a, x);
                   v.input("f", f);
                   v.check("f perp f iff f = 0", perp(rel, f, f) == f.is_zero());
                 })});
  out.push_back({"perp.3", {"⊥.3"}, "disjointness is downward closed",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   auto [f1, g1] = related_pair(r, rel, a, x, c);
                   const PartialMap f = compose(idem(r, a), f1), g = compose(idem(r, a), g1);
                   v.input("f'", f1);
                   v.input("g'", g1);
                   v.input("f", f);
                   v.input("g", g);
                   v.check("f <= f', g <= g'", leq(f, f1) && leq(g, g1));
                   v.check("f perp g", perp(rel, f, g));
                 })});
  out.push_back({"perp.4", {"⊥.4"}, "f perp g implies hfk perp hgk'",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a0 = obj(r, b), a = obj(r, b), x = obj(r, b), c = obj(r, b), x2 = obj(r, b),
                                c2 = obj(r, b);
                   auto [f, g] = related_pair(r, rel, a, x, c);
                   const PartialMap h = gen_partial_map(r, a0, a), k = gen_partial_map(r, x, x2),
                                    k2 = gen_partial_map(r, c, c2);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("h", h);
                   v.input("k", k);
                   v.input("k'", k2);
                   v.check("hfk perp hgk'", perp(rel, compose({h, f, k}), compose({h, g, k2})));
                 })});
  out.push_back({"perp.5", {"⊥.5"}, "f perp g implies rf perp rg",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   auto [f, g] = related_pair(r, rel, a, x, c);
                   v.input("f", f);
                   v.input("g", g);
                   v.check("rf perp rg", perp(rel, restriction(f), restriction(g)));
                 })});
  out.push_back({"perp.consequences", {}, "f perp 0; disjoint maps annihilate; total maps are disjoint only from 0; "
                                          "e perp f iff e perp rf; f perp g implies f perp rg",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b, 1);
                   auto [f, g] = related_pair(r, rel, a, x, c);
                   const PartialMap t = gen_total_map(r, a, c), p = gen_partial_map(r, a, x), e = idem(r, a);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("t", t);
                   v.input("p", p);
                   v.input("e", e);
                   v.check("f perp 0", perp(rel, p, zero(a, c)));
                   v.check("rf g = 0", compose(restriction(f), g).is_zero());
                   v.check("rg f = 0", compose(restriction(g), f).is_zero());
                   v.check("rf rg = 0", compose(restriction(f), restriction(g)).is_zero());
                   v.check("total t: t perp p iff p = 0", perp(rel, t, p) == p.is_zero());
                   v.check("e perp p iff e perp rp", perp(rel, e, p) == perp(rel, e, restriction(p)));
                   v.check("f perp rg and rf perp g", perp(rel, f, restriction(g)) && perp(rel, restriction(f), g));
                 })});
  out.push_back({"perp.bounds", {}, "perp_delta is contained in perp_0, and both relations sit between them",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   for (int i = 0; i < 2; ++i) {
                     auto [f, g] = related_pair(r, i == 0 ? reld() : rel0(), a, x, c);
                     v.input("f" + std::to_string(i), f);
                     v.input("g" + std::to_string(i), g);
                     if (perp(reld(), f, g)) v.check("delta implies 0", perp(rel0(), f, g));
                     v.check("related pair is 0-disjoint", perp(rel0(), f, g));
                   }
                 }});

  // Idempotent level.
  out.push_back({"Operp.0", {"𝒪⊥.0"}, "the full subset is related to the empty one",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const int n = small(r, b);
                   v.input("n", std::int64_t{n});
                   const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
                   v.check("1 perp 0", rel.relates(n, full, 0));
                 })});
  out.push_back({"Operp.1", {"𝒪⊥.1"}, "the idempotent relation is symmetric",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const int n = small(r, b);
                   const auto p = static_cast<Mask>(gen_mask(r, n)), q = static_cast<Mask>(gen_mask(r, n));
                   v.input("n", std::int64_t{n});
                   v.input("e", std::int64_t{p});
                   v.input("d", std::int64_t{q});
                   v.check("symmetric", rel.relates(n, p, q) == rel.relates(n, q, p));
                 })});
  out.push_back({"Operp.2", {"𝒪⊥.2"}, "only the empty subset is related to itself",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const int n = small(r, b);
                   const auto p = static_cast<Mask>(gen_mask(r, n));
                   v.input("n", std::int64_t{n});
                   v.input("e", std::int64_t{p});
                   v.check("e perp e iff e = 0", rel.relates(n, p, p) == (p == 0));
                 })});
  out.push_back({"Operp.3", {"𝒪⊥.3"}, "the idempotent relation is downward closed",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const int n = small(r, b);
                   auto [p, q] = related_masks(r, rel, n);
                   const auto p2 = p & static_cast<Mask>(gen_mask(r, n)), q2 = q & static_cast<Mask>(gen_mask(r, n));
                   v.input("n", std::int64_t{n});
                   v.input("e", std::int64_t{p});
                   v.input("d", std::int64_t{q});
                   v.input("e'", std::int64_t{p2});
                   v.input("d'", std::int64_t{q2});
                   v.check("related", rel.relates(n, p, q));
                   v.check("subsets related", rel.relates(n, p2, q2));
                 })});
  out.push_back({"Operp.4", {"𝒪⊥.4"}, "preimages of related subsets under any map are related",
                 both([](Rng& r, const SizeBounds& b, const InterferenceRel& rel, Verdict& v) {
                   const int n = small(r, b), m = small(r, b);
                   auto [p, q] = related_masks(r, rel, n);
                   const PartialMap h = gen_partial_map(r, FinObj(m), FinObj(n));
                   v.input("n", std::int64_t{n});
                   v.input("e", std::int64_t{p});
                   v.input("d", std::int64_t{q});
                   v.input("h", h);
                   v.check("r(he) perp r(hd)", rel.relates(m, preimage(h, p), preimage(h, q)));
                 })});
  out.push_back({"Operp.collapse", {}, "a custom relation on one object that passes validation is perp_delta or perp_0 there",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const int n = r.range(0, std::min(b.max_size, 4));
                   const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
                   // perp_delta plus the downward closures of a few random disjoint pairs.
                   InterferenceRel::PairList pairs;
                   for (Mask m = 0; m <= full; ++m) pairs.emplace_back(m, 0);
                   const int seeds = r.range(0, 3);
                   for (int s = 0; s < seeds; ++s) {
                     auto [p, q] = related_masks(r, rel0(), n);
                     for (Mask p2 = p;; p2 = (p2 - 1) & p) {
                       for (Mask q2 = q;; q2 = (q2 - 1) & q) {
                         pairs.emplace_back(p2, q2);
                         if (q2 == 0) break;
                       }
                       if (p2 == 0) break;
                     }
                   }
                   const auto rel = InterferenceRel::custom({{n, pairs}});
                   v.input("n", std::int64_t{n});
                   v.input("pairs", nlohmann::json(pairs).dump());
                   const auto rep = validate_interference(rel, n);
                   if (!rep.ok) {
                     v.vacuous();
                     return;
                   }
                   bool is_min = true, is_max = true;
                   for (Mask p = 0; p <= full; ++p) {
                     for (Mask q = 0; q <= full; ++q) {
                       const bool got = rel.relates(n, p, q);
                       is_min = is_min && got == reld().relates(n, p, q);
                       is_max = is_max && got == rel0().relates(n, p, q);
                     }
                   }
                   v.check("validated relation is minimal or maximal", is_min || is_max);
                 }});
  return out;
}

}  // namespace iterlab::laws
