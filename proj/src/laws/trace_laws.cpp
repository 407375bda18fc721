#include "iterlab/oracle.hpp"
#include "laws.hpp"

namespace iterlab::laws {

namespace {

int carrier(const SizeBounds& b) { return std::min(b.max_size, 4); }

MatObj mobj(Rng& r, const SizeBounds& b, int min_parts = 0) { return gen_matobj(r, b.max_parts, carrier(b), min_parts); }

Matrix id(const MatObj& a) { return Matrix::identity(a); }

Matrix sum(const Matrix& f, const Matrix& g) { return direct_sum(f, g); }

struct Traceable {
  MatObj x, a, b;
  Matrix g;
};

Traceable traceable(Rng& r, const SizeBounds& bounds) {
  Traceable t{mobj(r, bounds), mobj(r, bounds), mobj(r, bounds), {}};
  t.g = gen_matrix(r, concat(t.x, t.a), concat(t.x, t.b));
  return t;
}

void record(Verdict& v, const Traceable& t) {
  v.input("G", t.g);
  v.input("traced parts", static_cast<std::int64_t>(t.x.size()));
}

// Random h: X -> X'. With `onto`, the first |X'| points cover X' whenever X is large enough.
Matrix link(Rng& r, const MatObj& x, const MatObj& x1, bool onto) {
  const FinObj fx(total_size(x)), fx1(total_size(x1));
  if (!onto) return gen_matrix(r, x, x1);
  std::vector<int> t(static_cast<std::size_t>(fx.size()), kUndef);
  for (int i = 0; i < fx.size(); ++i) t[static_cast<std::size_t>(i)] = i < fx1.size() ? i : r.below_int(fx1.size() + 1) - 1;
  return unflatten(PartialMap(fx, fx1, std::move(t)), x, x1);
}

}  // namespace

std::vector<Law> trace_laws() {
  std::vector<Law> out;
  out.push_back({"Trace.Tightening", {"Tightening"}, "Tr((1 + h) G (1 + k)) = h Tr(G) k",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   const MatObj a0 = mobj(r, bd), b0 = mobj(r, bd);
                   const Matrix pre = gen_matrix(r, a0, t.a), post = gen_matrix(r, t.b, b0);
                   record(v, t);
                   v.input("h", pre);
                   v.input("k", post);
                   const std::size_t n = t.x.size();
                   v.equal("tightening", h.tr(mat_compose({sum(id(t.x), pre), t.g, sum(id(t.x), post)}), n),
                           mat_compose({pre, h.tr(t.g, n), post}));
                 }});
  out.push_back({"Trace.Sliding", {"Sliding"}, "Tr^X(G (k + 1)) = Tr^Y((k + 1) G) for G: X + A -> Y + B, k: Y -> X",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd), y = mobj(r, bd), a = mobj(r, bd), b = mobj(r, bd);
                   const Matrix g = gen_matrix(r, concat(x, a), concat(y, b));
                   const Matrix k = gen_matrix(r, y, x);
                   v.input("G", g);
                   v.input("k", k);
                   v.equal("sliding", h.tr(mat_compose(g, sum(k, id(b))), x.size()),
                           h.tr(mat_compose(sum(k, id(a)), g), y.size()));
                 }});
  out.push_back({"Trace.Vanishing", {"Vanishing"}, "tracing nothing is the identity and tracing X + Y is tracing X then Y",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   record(v, t);
                   const std::size_t n = t.x.size();
                   v.equal("Tr^0 G = G", h.tr(t.g, 0), t.g);
                   const std::size_t cut = static_cast<std::size_t>(r.range(0, static_cast<int>(n)));
                   v.input("split", static_cast<std::int64_t>(cut));
                   v.equal("Tr^(X+Y) = Tr^Y Tr^X", h.tr(t.g, n), h.tr(h.tr(t.g, cut), n - cut));
                   if (n > 0) {
                     const std::size_t k = static_cast<std::size_t>(r.below_int(static_cast<int>(n)));
                     v.equal("any traced part first", h.tr(t.g, n), h.tr(trace_part<ParBase>(t.g, k, [&h](const PartialMap& f, const PartialMap& g) { return h.w(f, g); }), n - 1));
                   }
                 }});
  out.push_back({"Trace.Superposing", {"Superposing"}, "Tr(G) + H = Tr(G + H)",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   const Matrix k = gen_matrix(r, mobj(r, bd), mobj(r, bd));
                   record(v, t);
                   v.input("H", k);
                   v.equal("superposing", sum(h.tr(t.g, t.x.size()), k), h.tr(sum(t.g, k), t.x.size()));
                 }});
  out.push_back({"Trace.Yanking", {"Yanking"}, "tracing the symmetry X + X -> X + X gives the identity",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd, 1);
                   v.input("X parts", static_cast<std::int64_t>(x.size()));
                   v.input("X", describe(x));
                   v.equal("yanking", h.tr(symmetry<ParBase>(x, x), x.size()), id(x));
                 }});
  out.push_back({"Trace.Uniform", {"Uniform"}, "G (h + 1) = (h + 1) G' implies Tr G = Tr G'",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x1 = mobj(r, bd), a = mobj(r, bd), b = mobj(r, bd);
                   const MatObj x = mobj(r, bd);
                   const Matrix g1 = gen_matrix(r, concat(x1, a), concat(x1, b));
                   for (int attempt = 0; attempt < 4; ++attempt) {
                     const MatObj xs = attempt < 3 ? x : x1;
                     const Matrix hh = attempt < 3 ? link(r, xs, x1, attempt > 0) : id(x1);
                     const PartialMap target = flatten(mat_compose(sum(hh, id(a)), g1));
                     const PartialMap via = flatten(sum(hh, id(b)));
                     const auto s = solve_through(r, target, via, 0);
                     if (!s) continue;
                     const Matrix g = unflatten(*s, concat(xs, a), concat(xs, b));
                     v.input("G", g);
                     v.input("G'", g1);
                     v.input("h", hh);
                     v.check("square commutes", mat_compose(g, sum(hh, id(b))) == mat_compose(sum(hh, id(a)), g1));
                     v.equal("Tr G = Tr G'", h.tr(g, xs.size()), h.tr(g1, x1.size()));
                     return;
                   }
                   v.vacuous();
                 }});
  out.push_back({"Trace.ClosedForm", {}, "Tr G = G4 join the sum of G3 G1^n G2",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   record(v, t);
                   v.equal("closed form", h.tr(t.g, t.x.size()), trace_closed_form(t.g, t.x.size()));
                 }});
  out.push_back({"Trace.CopairingForm", {}, "Tr G = i_2 G [Iter(i_1 G); 1_B]",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   record(v, t);
                   const IterFn<ParBase> it = [&h](const Matrix& f) { return h.iter(f); };
                   v.equal("copairing form", h.tr(t.g, t.x.size()),
                           trace_from_iter_copairing(it, t.g, t.x.size()));
                 }});
  out.push_back({"Trace.Oracle", {}, "the trace agrees with feedback simulation on the flat map",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   record(v, t);
                   v.equal("simulation", h.tr(t.g, t.x.size()), trace_by_simulation(t.g, t.x.size()));
                 }});

  out.push_back({"Iter.Iteration", {}, "Iter f = f [Iter f; 1_A]",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd), a = mobj(r, bd);
                   const Matrix f = gen_matrix(r, x, concat(x, a));
                   v.input("f", f);
                   const Matrix it = h.iter(f);
                   v.equal("iteration", it, mat_compose(f, copair(std::vector<Matrix>{it, id(a)}, a)));
                 }});
  out.push_back({"Iter.Naturality", {}, "Iter(f (1 + g)) = Iter(f) g",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd), a = mobj(r, bd), b = mobj(r, bd);
                   const Matrix f = gen_matrix(r, x, concat(x, a)), g = gen_matrix(r, a, b);
                   v.input("f", f);
                   v.input("g", g);
                   v.equal("naturality", h.iter(mat_compose(f, sum(id(x), g))), mat_compose(h.iter(f), g));
                 }});
  out.push_back({"Iter.Dinaturality", {}, "Iter(g [h; i_2]) = g [Iter(h [g; i_2]); 1_A] for g: X -> Y + A, h: Y -> X + A",
                 [](Rng& r, const SizeBounds& bd, const Hooks& hk, Verdict& v) {
                   const MatObj x = mobj(r, bd), y = mobj(r, bd), a = mobj(r, bd);
                   const Matrix g = gen_matrix(r, x, concat(y, a)), k = gen_matrix(r, y, concat(x, a));
                   v.input("g", g);
                   v.input("h", k);
                   const Matrix k_then = copair(std::vector<Matrix>{k, injection<ParBase>({x, a}, 1)}, concat(x, a));
                   const Matrix g_then = copair(std::vector<Matrix>{g, injection<ParBase>({y, a}, 1)}, concat(y, a));
                   v.equal("dinaturality", hk.iter(mat_compose(g, k_then)),
                           mat_compose(g, copair(std::vector<Matrix>{hk.iter(mat_compose(k, g_then)), id(a)}, a)));
                 }});
  out.push_back({"Iter.Diagonal", {}, "Iter(Iter f) = Iter(f (codiagonal + 1)) for f: X -> X + X + A",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd), a = mobj(r, bd);
                   const Matrix f = gen_matrix(r, x, concat(concat(x, x), a));
                   v.input("f", f);
                   v.equal("diagonal", h.iter(h.iter(f)),
                           h.iter(mat_compose(f, sum(codiagonal<ParBase>(x, 2), id(a)))));
                 }});
  out.push_back({"Iter.Uniform", {}, "f (h + 1) = h f' implies Iter f = h Iter f'",
                 [](Rng& r, const SizeBounds& bd, const Hooks& hk, Verdict& v) {
                   const MatObj x1 = mobj(r, bd), a = mobj(r, bd), x = mobj(r, bd);
                   const Matrix f1 = gen_matrix(r, x1, concat(x1, a));
                   for (int attempt = 0; attempt < 4; ++attempt) {
                     const MatObj xs = attempt < 3 ? x : x1;
                     const Matrix h = attempt < 3 ? link(r, xs, x1, attempt > 0) : id(x1);
                     const auto s = solve_through(r, flatten(mat_compose(h, f1)), flatten(sum(h, id(a))), 0);
                     if (!s) continue;
                     const Matrix f = unflatten(*s, xs, concat(xs, a));
                     v.input("f", f);
                     v.input("f'", f1);
                     v.input("h", h);
                     v.check("square commutes", mat_compose(f, sum(h, id(a))) == mat_compose(h, f1));
                     v.equal("Iter f = h Iter f'", hk.iter(f), mat_compose(h, hk.iter(f1)));
                     return;
                   }
                   v.vacuous();
                 }});
  out.push_back({"Iter.WandRoundTrip", {}, "iteration and the matrix wand determine each other",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const MatObj x = mobj(r, bd), a = mobj(r, bd);
                   const auto fam = gen_disjoint_matrices(r, x, concat(x, a), 2);
                   const Matrix f = submatrix(fam[0], 0, x.size(), 0, x.size());
                   const Matrix g = submatrix(fam[1], 0, x.size(), x.size(), x.size() + a.size());
                   const Matrix step = gen_matrix(r, x, concat(x, a));
                   v.input("F", f);
                   v.input("G", g);
                   v.input("f", step);
                   const IterFn<ParBase> it = [&h](const Matrix& m) { return h.iter(m); };
                   const MatWandFn<ParBase> wand = [&it](const Matrix& p, const Matrix& q) {
                     return wand_from_iter(it, p, q);
                   };
                   v.equal("wand from iteration is the flat wand", wand(f, g), flat_matrix_wand(f, g));
                   v.equal("iteration from that wand is iteration", iter_from_wand(wand, step), h.iter(step));
                 }});
  out.push_back({"Iter.TraceRoundTrip", {}, "iteration and trace determine each other",
                 [](Rng& r, const SizeBounds& bd, const Hooks& h, Verdict& v) {
                   const Traceable t = traceable(r, bd);
                   const Matrix step = gen_matrix(r, t.x, concat(t.x, t.a));
                   record(v, t);
                   v.input("f", step);
                   const TraceFn<ParBase> tr = [&h](const Matrix& m, std::size_t c) { return h.tr(m, c); };
                   const IterFn<ParBase> it = [&tr](const Matrix& m) { return iter_from_trace(tr, m); };
                   v.equal("iteration from trace", it(step), h.iter(step));
                   v.equal("trace from that iteration", trace_from_iter(it, t.g, t.x.size()), h.tr(t.g, t.x.size()));
                 }});
  return out;
}

}  // namespace iterlab::laws
