#include "laws.hpp"

namespace iterlab::laws {

namespace {

void r1(const Tuple& t, const Hooks&, Verdict& v) {
  const auto& f = t[0];
  v.input("f", f);
  v.equal("rf f = f", compose(restriction(f), f), f);
}

void r2(const Tuple& t, const Hooks&, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("rf rg = rg rf", compose(restriction(f), restriction(g)), compose(restriction(g), restriction(f)));
}

void r3(const Tuple& t, const Hooks&, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("r(rg f) = rg rf", restriction(compose(restriction(g), f)), compose(restriction(g), restriction(f)));
}

void r4(const Tuple& t, const Hooks&, Verdict& v) {
  const auto &f = t[0], &g = t[1];
  v.input("f", f);
  v.input("g", g);
  v.equal("f rg = r(fg) f", compose(f, restriction(g)), compose(restriction(compose(f, g)), f));
}

Tuple span(Rng& r, const SizeBounds& b) {
  const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
  return {gen_partial_map(r, a, x), gen_partial_map(r, a, c)};
}

Tuple chain(Rng& r, const SizeBounds& b) {
  const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
  return {gen_partial_map(r, a, x), gen_partial_map(r, x, c)};
}

Law restriction_law(std::string id, std::string statement, TupleCheck check, bool chained, bool single) {
  Law l;
  l.id = std::move(id);
  l.statement = std::move(statement);
  l.sample = [=](Rng& r, const SizeBounds& b, const Hooks& h, Verdict& v) {
    if (single) {
      const FinObj a = obj(r, b), x = obj(r, b);
      check({gen_partial_map(r, a, x)}, h, v);
    } else {
      check(chained ? chain(r, b) : span(r, b), h, v);
    }
  };
  l.exhaustive = [=](const SizeBounds&) {
    return tuple_plan(single ? all_singles() : chained ? all_chains() : all_spans(), check,
                      "all maps on carriers of size <= 3");
  };
  return l;
}

}  // namespace

std::vector<Law> finpar_laws() {
  std::vector<Law> out;
  out.push_back(restriction_law("R.1", "restriction(f) f = f", r1, false, true));
  out.push_back(restriction_law("R.2", "restrictions of maps with a common domain commute", r2, false, false));
  out.push_back(restriction_law("R.3", "restriction(restriction(g) f) = restriction(g) restriction(f)", r3, false,
                                false));
  out.push_back(restriction_law("R.4", "f restriction(g) = restriction(fg) f", r4, true, false));

  out.push_back({"R.order", {}, "<= is a partial order, compatible with composition and restriction",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), y = obj(r, b), z = obj(r, b);
                   const PartialMap g = gen_partial_map(r, x, y);
                   const PartialMap f = compose(idem(r, x), g);
                   const PartialMap e = compose(idem(r, x), f);
                   const PartialMap h = gen_partial_map(r, a, x), k = gen_partial_map(r, y, z);
                   const PartialMap other = gen_partial_map(r, x, y);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("h", h);
                   v.input("k", k);
                   v.input("other", other);
                   v.check("reflexive", leq(g, g));
                   v.check("restricted map is below", leq(f, g));
                   v.check("transitive", leq(e, f) && leq(e, g));
                   v.check("antisymmetric", !(leq(g, other) && leq(other, g)) || g == other);
                   v.check("monotone composition", leq(compose({h, f, k}), compose({h, g, k})));
                   v.check("monotone restriction", leq(restriction(f), restriction(g)));
                 }});

  out.push_back({"R.zero", {}, "zero maps are restriction zeroes: r0 = 0, 0 absorbs, 0 <= f",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b), c = obj(r, b);
                   const PartialMap f = gen_partial_map(r, a, x), g = gen_partial_map(r, x, c);
                   v.input("f", f);
                   v.input("g", g);
                   v.equal("r0 = 0", restriction(zero(a, x)), zero(a, a));
                   v.equal("f 0 = 0", compose(f, zero(x, c)), zero(a, c));
                   v.equal("0 g = 0", compose(zero(a, x), g), zero(a, c));
                   v.check("0 <= f", leq(zero(a, x), f));
                   v.check("r f = 0 implies f = 0", !restriction(f).is_zero() || f.is_zero());
                 }});

  out.push_back({"R.idempotents", {}, "restriction idempotents form a bounded meet-semilattice below the identity",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b);
                   const PartialMap e = idem(r, a), d = idem(r, a), f = gen_partial_map(r, a, x);
                   v.input("e", e);
                   v.input("d", d);
                   v.input("f", f);
                   v.check("rf is a restriction idempotent", restriction(f).is_rest_idem());
                   v.equal("r(rf) = rf", restriction(restriction(f)), restriction(f));
                   v.equal("ee = e", compose(e, e), e);
                   v.equal("ed = de", compose(e, d), compose(d, e));
                   v.check("e <= 1", leq(e, identity(a)));
                   v.check("ed is the meet", leq(compose(e, d), e) && leq(compose(e, d), d));
                 }});

  out.push_back({"R.total", {}, "total maps have identity restriction and are closed under composition",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const FinObj a = obj(r, b), x = obj(r, b, 1), c = obj(r, b, 1);
                   const PartialMap f = gen_total_map(r, a, x), g = gen_total_map(r, x, c);
                   const PartialMap h = gen_partial_map(r, a, x);
                   v.input("f", f);
                   v.input("g", g);
                   v.input("h", h);
                   v.equal("rf = 1", restriction(f), identity(a));
                   v.check("fg total", compose(f, g).is_total());
                   v.check("total iff rh = 1", h.is_total() == (restriction(h) == identity(a)));
                 }});
  return out;
}

}  // namespace iterlab::laws
