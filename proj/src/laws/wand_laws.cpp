#include <map>

#include "iterlab/oracle.hpp"
#include "laws.hpp"

namespace iterlab::laws {

namespace {

struct Pair {
  FinObj x, a;
  PartialMap f, g;
};

Pair pair(Rng& r, int max_size) {
  Pair p{gen_obj(r, max_size), gen_obj(r, max_size), {}, {}};
  std::tie(p.f, p.g) = gen_disjoint_pair(r, p.x, p.a);
  return p;
}

void record(Verdict& v, const Pair& p) {
  v.input("f", p.f);
  v.input("g", p.g);
}

// Map dom -> cod hitting every point of cod; needs |dom| >= |cod|. Remaining points are
// sent anywhere or left undefined.
PartialMap onto(Rng& r, const FinObj& dom, const FinObj& cod) {
  std::vector<int> order(static_cast<std::size_t>(dom.size()));
  for (int i = 0; i < dom.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[r.below(i)]);
  std::vector<int> t(order.size(), kUndef);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    if (static_cast<int>(i) < cod.size()) {
      t[static_cast<std::size_t>(x)] = static_cast<int>(i);
    } else if (cod.size() > 0 && r.coin()) {
      t[static_cast<std::size_t>(x)] = r.below_int(cod.size());
    }
  }
  return PartialMap(dom, cod, std::move(t));
}

// h: X -> X' with h f' = f h and h g' = g, all of f, g, f', g' disjoint pairs.
struct Square {
  PartialMap h, f, g, f1, g1;
};

Square square(Rng& r, const SizeBounds& b) {
  const int s = r.range(0, b.max_size);
  const FinObj x1(s), x(r.range(s, std::max(s, b.max_size))), a = obj(r, b);
  Square sq;
  std::tie(sq.f1, sq.g1) = gen_disjoint_pair(r, x1, a);
  for (int attempt = 0;; ++attempt) {
    sq.h = (attempt < 3 && r.coin()) ? gen_partial_map(r, x, x1) : onto(r, x, x1);
    sq.g = compose(sq.h, sq.g1);
    if (auto f = solve_through(r, compose(sq.h, sq.f1), sq.h, sq.g.support())) {
      sq.f = *f;
      return sq;
    }
  }
}

void record(Verdict& v, const Square& sq) {
  v.input("h", sq.h);
  v.input("f", sq.f);
  v.input("g", sq.g);
  v.input("f'", sq.f1);
  v.input("g'", sq.g1);
}

// Any h with g <= h and fh <= h: each point takes the value at the end of its
// f-trajectory, where dead ends and cycles get an arbitrary (possibly undefined) value.
PartialMap inductive_bound(Rng& r, const PartialMap& f, const PartialMap& g) {
  const int n = f.dom().size();
  std::map<int, int> chosen;
  auto pick = [&](int key) {
    auto it = chosen.find(key);
    if (it != chosen.end()) return it->second;
    const int val = (g.cod().size() > 0 && r.coin()) ? r.below_int(g.cod().size()) : kUndef;
    chosen.emplace(key, val);
    return val;
  };
  std::vector<int> t(static_cast<std::size_t>(n), kUndef);
  for (int x = 0; x < n; ++x) {
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    int y = x, step = 0;
    while (true) {
      if (auto out = g(y)) {
        t[static_cast<std::size_t>(x)] = *out;
        break;
      }
      auto next = f(y);
      if (!next) {
        t[static_cast<std::size_t>(x)] = pick(y);
        break;
      }
      if (seen[static_cast<std::size_t>(y)] >= 0) {
        // y is on the cycle; name the cycle by its least point.
        int least = y;
        for (int z = *f(y); z != y; z = *f(z)) least = std::min(least, z);
        t[static_cast<std::size_t>(x)] = pick(n + least);
        break;
      }
      seen[static_cast<std::size_t>(y)] = step++;
      y = *next;
    }
  }
  return PartialMap(f.dom(), g.cod(), std::move(t));
}

void oracle_check(const PartialMap& f, const PartialMap& g, const Hooks& h, Verdict& v) {
  v.input("f", f);
  v.input("g", g);
  v.equal("wand = step simulation", h.w(f, g), step_simulate_map(f, g));
}

}  // namespace

std::vector<Law> wand_laws() {
  std::vector<Law> out;
  out.push_back({"wand.oracle", {"⩚.oracle"}, "the wand agrees pointwise with the step-simulation oracle",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   oracle_check(p.f, p.g, h, v);
                 },
                 [](const SizeBounds&) {
                   std::vector<Tuple> cases;
                   for (auto& [f, g] : enumerate_all(kEnumMaxX, kEnumMaxA)) cases.push_back({f, g});
                   return tuple_plan(std::move(cases),
                                     [](const Tuple& t, const Hooks& h, Verdict& v) { oracle_check(t[0], t[1], h, v); },
                                     "all disjoint pairs with |X| = 3, |A| = 2");
                 }});
  out.push_back({"wand.1", {"⩚.1"}, "iteration: g join f(f wand g) = f wand g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   record(v, p);
                   const PartialMap w = h.w(p.f, p.g);
                   v.equal("g join f(f wand g) = f wand g", join(p.g, compose(p.f, w)), w);
                 }});
  out.push_back({"wand.2", {"⩚.2"}, "naturality: (f wand g) h = f wand gh",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   const PartialMap k = gen_partial_map(r, p.a, obj(r, b));
                   record(v, p);
                   v.input("h", k);
                   v.equal("(f wand g) h = f wand gh", compose(h.w(p.f, p.g), k), h.w(p.f, compose(p.g, k)));
                 }});
  out.push_back({"wand.3", {"⩚.3"}, "dinaturality: kf wand kg = k(fk wand g) for f: X -> Y, k: Y -> X",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), y = obj(r, b), a = obj(r, b);
                   auto fam = gen_disjoint_family(r, x, FinObj(1), 2);
                   const PartialMap f = compose(restriction(fam[0]), gen_partial_map(r, x, y, 1.0));
                   const PartialMap g = compose(restriction(fam[1]), gen_partial_map(r, x, a, 1.0));
                   const PartialMap k = gen_partial_map(r, y, x);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("k", k);
                   v.equal("kf wand kg = k(fk wand g)", h.w(compose(k, f), compose(k, g)),
                           compose(k, h.w(compose(f, k), g)));
                 }});
  out.push_back({"wand.4", {"⩚.4"},
                 "diagonal: (f wand f') perp (f wand g) and (f join f') wand g = (f wand f') wand (f wand g)",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b);
                   auto fam = gen_disjoint_family(r, x, FinObj(1), 3);
                   const PartialMap f = compose(restriction(fam[0]), gen_partial_map(r, x, x, 1.0));
                   const PartialMap f1 = compose(restriction(fam[1]), gen_partial_map(r, x, x, 1.0));
                   const PartialMap g = compose(restriction(fam[2]), gen_partial_map(r, x, a, 1.0));
                   v.input("f", f);
                   v.input("f'", f1);
                   v.input("g", g);
                   const PartialMap wf = h.w(f, f1), wg = h.w(f, g);
                   if (!v.check("(f wand f') perp (f wand g)", perp(rel0(), wf, wg))) return;
                   v.equal("(f join f') wand g = (f wand f') wand (f wand g)", h.w(join(f, f1), g), h.w(wf, wg));
                 }});
  out.push_back({"alt-wand.1", {"Alt.⩚.1"}, "g join f(f wand g) <= f wand g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   record(v, p);
                   const PartialMap w = h.w(p.f, p.g);
                   v.check("g join f(f wand g) <= f wand g", leq(join(p.g, compose(p.f, w)), w));
                 }});
  out.push_back({"alt-wand.2", {"Alt.⩚.2"}, "a g' = g b and a f' = f a imply a(f' wand g') = (f wand g) b",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const int s = r.range(0, b.max_size), t = r.range(0, b.max_size);
                   const FinObj x1(s), x(r.range(s, std::max(s, b.max_size))), a1(t),
                       a(r.range(t, std::max(t, b.max_size)));
                   auto [f1, g1] = gen_disjoint_pair(r, x1, a1);
                   const PartialMap am = onto(r, x, x1), bm = onto(r, a, a1);
                   const PartialMap ag1 = compose(am, g1);
                   const PartialMap f = *solve_through(r, compose(am, f1), am, ag1.support());
                   const PartialMap g = *solve_through(r, ag1, bm, f.support());
                   v.input("a", am);
                   v.input("b", bm);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("f'", f1);
                   v.input("g'", g1);
                   const bool hyp = compose(am, g1) == compose(g, bm) && compose(am, f1) == compose(f, am) &&
                                    perp(rel0(), f, g);
                   if (!v.check("generated square satisfies the hypothesis", hyp)) return;
                   v.equal("a(f' wand g') = (f wand g) b", compose(am, h.w(f1, g1)), compose(h.w(f, g), bm));
                 }});
  out.push_back({"wand.inductive", {"alt-wand.3", "Alt.⩚.3"}, "fh <= h and g <= h imply f wand g <= h",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   const PartialMap bound = inductive_bound(r, p.f, p.g);
                   record(v, p);
                   v.input("h", bound);
                   if (!v.check("hypothesis fh <= h, g <= h", leq(compose(p.f, bound), bound) && leq(p.g, bound))) {
                     return;
                   }
                   v.check("f wand g <= h", leq(h.w(p.f, p.g), bound));
                 }});
  out.push_back({"wand.uniform", {}, "h g' = g and h f' = f h imply h(f' wand g') = f wand g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Square sq = square(r, b);
                   record(v, sq);
                   const bool hyp = compose(sq.h, sq.g1) == sq.g && compose(sq.h, sq.f1) == compose(sq.f, sq.h) &&
                                    perp(rel0(), sq.f, sq.g);
                   if (!v.check("generated square satisfies the hypothesis", hyp)) return;
                   v.equal("h(f' wand g') = f wand g", compose(sq.h, h.w(sq.f1, sq.g1)), h.w(sq.f, sq.g));
                 }});
  out.push_back({"wand.lax", {}, "g <= h g' and fh <= h f' imply f wand g <= h(f' wand g')",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   Square sq = square(r, b);
                   sq.f = compose(idem(r, sq.f.dom()), sq.f);
                   sq.g = compose(idem(r, sq.g.dom()), sq.g);
                   record(v, sq);
                   const bool hyp = leq(sq.g, compose(sq.h, sq.g1)) && leq(compose(sq.f, sq.h), compose(sq.h, sq.f1));
                   if (!v.check("hypothesis", hyp)) return;
                   v.check("f wand g <= h(f' wand g')", leq(h.w(sq.f, sq.g), compose(sq.h, h.w(sq.f1, sq.g1))));
                 }});
  out.push_back({"wand.colax", {}, "h g' <= g and h f' <= fh imply h(f' wand g') <= f wand g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   Square sq = square(r, b);
                   sq.f1 = compose(idem(r, sq.f1.dom()), sq.f1);
                   sq.g1 = compose(idem(r, sq.g1.dom()), sq.g1);
                   record(v, sq);
                   const bool hyp = leq(compose(sq.h, sq.g1), sq.g) && leq(compose(sq.h, sq.f1), compose(sq.f, sq.h));
                   if (!v.check("hypothesis", hyp)) return;
                   v.check("h(f' wand g') <= f wand g", leq(compose(sq.h, h.w(sq.f1, sq.g1)), h.w(sq.f, sq.g)));
                 }});
  out.push_back({"wand.restricted-guard", {}, "f wand g = (f wand rg) g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   record(v, p);
                   v.equal("f wand g = (f wand rg) g", h.w(p.f, p.g), compose(h.w(p.f, restriction(p.g)), p.g));
                 }});
  out.push_back({"wand.zero-body", {}, "0 wand g = g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b);
                   const PartialMap g = gen_partial_map(r, x, a);
                   v.input("g", g);
                   v.equal("0 wand g = g", h.w(zero(x, x), g), g);
                 }});
  out.push_back({"wand.zero-guard", {}, "f wand 0 = 0",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b);
                   const PartialMap f = gen_partial_map(r, x, x);
                   v.input("f", f);
                   v.equal("f wand 0 = 0", h.w(f, zero(x, a)), zero(x, a));
                 }});
  out.push_back({"wand.split-guard", {},
                 "f perp (g join g') implies (f wand g) perp (f wand g') and f wand (g join g') = f wand g join f wand g'",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b);
                   auto fam = gen_disjoint_family(r, x, FinObj(1), 3);
                   const PartialMap f = compose(restriction(fam[0]), gen_partial_map(r, x, x, 1.0));
                   const PartialMap g = compose(restriction(fam[1]), gen_partial_map(r, x, a, 1.0));
                   const PartialMap g1 = compose(restriction(fam[2]), gen_partial_map(r, x, a, 1.0));
                   v.input("f", f);
                   v.input("g", g);
                   v.input("g'", g1);
                   const PartialMap wg = h.w(f, g), wg1 = h.w(f, g1);
                   if (!v.check("(f wand g) perp (f wand g')", perp(rel0(), wg, wg1))) return;
                   v.equal("f wand (g join g') = f wand g join f wand g'", h.w(f, join(g, g1)), join(wg, wg1));
                 }});
  out.push_back({"wand.total-body", {}, "a total f is disjoint only from 0, and f wand 0 = 0",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b, 1), a = obj(r, b);
                   const PartialMap f = gen_total_map(r, x, x), g = gen_partial_map(r, x, a);
                   v.input("f", f);
                   v.input("g", g);
                   v.check("f perp g iff g = 0", perp(rel0(), f, g) == g.is_zero());
                   v.equal("f wand 0 = 0", h.w(f, zero(x, a)), zero(x, a));
                 }});
  out.push_back({"wand.total-guard", {}, "a total g is disjoint only from 0, and 0 wand g = g",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b, 1);
                   const PartialMap g = gen_total_map(r, x, a), f = gen_partial_map(r, x, x);
                   v.input("f", f);
                   v.input("g", g);
                   v.check("f perp g iff f = 0", perp(rel0(), f, g) == f.is_zero());
                   v.equal("0 wand g = g", h.w(zero(x, x), g), g);
                 }});
  out.push_back({"wand.unrolling", {},
                 "f wand g = g join fg join ... join f^n g join f^(n+1)(f wand g), pairwise disjoint, for n <= 4",
                 [](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
                   const Pair p = pair(r, b.max_size);
                   record(v, p);
                   const PartialMap w = h.w(p.f, p.g);
                   for (int n = 0; n <= 4; ++n) {
                     std::vector<PartialMap> terms;
                     for (int i = 0; i <= n; ++i) terms.push_back(compose(power(p.f, i), p.g));
                     terms.push_back(compose(power(p.f, n + 1), w));
                     const std::string tag = "n = " + std::to_string(n);
                     if (!v.check(tag + ": terms pairwise disjoint", !first_clash(rel0(), terms).has_value())) return;
                     v.equal(tag + ": unrolled join = f wand g", join(rel0(), terms, p.x, p.a), w);
                   }
                 }});
  out.push_back({"wand.minimal-relation", {}, "under perp_delta the wand is f wand g = g and satisfies iteration",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj x = obj(r, b), a = obj(r, b);
                   PartialMap f = gen_partial_map(r, x, x), g = gen_partial_map(r, x, a);
                   if (r.coin()) {
                     f = zero(x, x);
                   } else {
                     g = zero(x, a);
                   }
                   v.input("f", f);
                   v.input("g", g);
                   const PartialMap w = minimal_wand(f, g);
                   v.equal("canonical wand under perp_delta", kleene_wand(f, g, reld()), w);
                   v.equal("g join f(f wand g) = f wand g", join(reld(), g, compose(f, w)), w);
                 }});
  return out;
}

}  // namespace iterlab::laws
