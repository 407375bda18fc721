#include "laws.hpp"

namespace iterlab::laws {

namespace {

int carrier(const SizeBounds& b) { return std::min(b.max_size, 4); }

MatObj mobj(Rng& r, const SizeBounds& b, int min_parts = 0) { return gen_matobj(r, b.max_parts, carrier(b), min_parts); }

// Split n parts into 1 to 3 consecutive blocks, possibly empty.
Partition blocks(Rng& r, std::size_t n) {
  const int k = r.range(1, 3);
  std::vector<std::size_t> cuts{0, n};
  for (int i = 1; i < k; ++i) cuts.push_back(static_cast<std::size_t>(r.range(0, static_cast<int>(n))));
  std::sort(cuts.begin(), cuts.end());
  Partition p;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) p.push_back(cuts[i + 1] - cuts[i]);
  return p;
}

std::vector<Matrix> copies(const Matrix& f, std::size_t k) { return std::vector<Matrix>(k, f); }

// Flat oracle for decisions A -> A + ... + A: every point goes to its own copy in some
// block, or nowhere.
bool flat_is_decision(const Matrix& d, std::size_t k) {
  if (!same_obj(d.cod(), repeat(d.dom(), k))) return false;
  const PartialMap f = flatten(d);
  const int n = total_size(d.dom());
  for (int x = 0; x < n; ++x) {
    if (auto y = f(x); y && *y % n != x) return false;
  }
  return true;
}

// Random decision: a copy chosen per point, or undefined.
Matrix random_decision(Rng& r, const MatObj& a, std::size_t k) {
  const int n = total_size(a);
  std::vector<int> t(static_cast<std::size_t>(n), kUndef);
  for (int x = 0; x < n; ++x) {
    const int c = r.below_int(static_cast<int>(k) + 1);
    if (c > 0) t[static_cast<std::size_t>(x)] = (c - 1) * n + x;
  }
  return unflatten(PartialMap(FinObj(n), FinObj(n * static_cast<int>(k)), std::move(t)), a, repeat(a, k));
}

bool restriction_idempotent(const Matrix& m) { return same_obj(m.dom(), m.cod()) && mat_restriction(m) == m; }

// A pair over a shared domain that is disjoint about half the time.
std::pair<Matrix, Matrix> maybe_disjoint(Rng& r, const MatObj& a, const MatObj& b, const MatObj& c) {
  if (r.coin()) {
    const FinObj fa(total_size(a));
    auto [f, g] = gen_disjoint_pair(r, fa, FinObj(1));
    return {unflatten(compose(restriction(f), gen_partial_map(r, fa, FinObj(total_size(b)), 1.0)), a, b),
            unflatten(compose(restriction(g), gen_partial_map(r, fa, FinObj(total_size(c)), 1.0)), a, c)};
  }
  return {gen_matrix(r, a, b), gen_matrix(r, a, c)};
}

}  // namespace

std::vector<Law> mat_laws() {
  std::vector<Law> out;
  out.push_back({"mat.R", {}, "the restriction axioms hold for matrices",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b), c = mobj(r, b);
                   const Matrix f = gen_matrix(r, a, x), g = gen_matrix(r, a, c), k = gen_matrix(r, x, c);
                   v.input("F", f);
                   v.input("G", g);
                   v.input("K", k);
                   v.equal("R.1", mat_compose(mat_restriction(f), f), f);
                   v.equal("R.2", mat_compose(mat_restriction(f), mat_restriction(g)),
                           mat_compose(mat_restriction(g), mat_restriction(f)));
                   v.equal("R.3", mat_restriction(mat_compose(mat_restriction(g), f)),
                           mat_compose(mat_restriction(g), mat_restriction(f)));
                   v.equal("R.4", mat_compose(f, mat_restriction(k)),
                           mat_compose(mat_restriction(mat_compose(f, k)), f));
                 }});
  out.push_back({"mat.compose-flat", {}, "matrix operations agree with the same operations on flat maps",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b), c = mobj(r, b);
                   const Matrix f = gen_matrix(r, a, x), k = gen_matrix(r, x, c);
                   const auto fam = gen_disjoint_matrices(r, a, x, 2);
                   v.input("F", f);
                   v.input("K", k);
                   v.input("P", fam[0]);
                   v.input("Q", fam[1]);
                   v.equal("composition", flatten(mat_compose(f, k)), compose(flatten(f), flatten(k)));
                   v.equal("restriction", flatten(mat_restriction(f)), restriction(flatten(f)));
                   v.equal("join", flatten(mat_join(fam[0], fam[1])), join(flatten(fam[0]), flatten(fam[1])));
                   v.equal("identity", flatten(Matrix::identity(a)), identity(FinObj(total_size(a))));
                   v.check("order", mat_leq(fam[0], f) == leq(flatten(fam[0]), flatten(f)));
                   v.equal("round trip", unflatten(flatten(f), a, x), f);
                 }});
  out.push_back({"decision.D", {"D.1", "D.2"}, "<f> restricted back is rf, and <f>(f+...+f) = f(i_1+...+i_n)",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b);
                   const Matrix f = gen_matrix(r, a, x);
                   const Partition p = blocks(r, x.size());
                   const std::size_t k = p.size();
                   v.input("F", f);
                   v.input("blocks", static_cast<std::int64_t>(k));
                   const Matrix d = decision_of(f, p);
                   v.check("<f> is a decision", is_decision(d, k));
                   v.equal("D.1", mat_restriction(f), mat_compose(d, codiagonal<ParBase>(a, k)));
                   v.equal("D.2", mat_compose(d, direct_sum(copies(f, k))),
                           mat_compose(f, sum_of_injections<ParBase>(split_obj<ParBase>(x, p))));
                 }});
  out.push_back({"decision.d", {"d.1", "d.2"}, "the decision equations hold exactly for maps sending each point to its own copy",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b);
                   const std::size_t k = static_cast<std::size_t>(r.range(1, 3));
                   const Matrix d = r.coin() ? random_decision(r, a, k) : gen_matrix(r, a, repeat(a, k));
                   v.input("d", d);
                   v.check("is_decision agrees with the pointwise reading", is_decision(d, k) == flat_is_decision(d, k));
                 }});
  out.push_back({"decision.idempotent", {}, "the decision of a decision is itself",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b);
                   const std::size_t k = static_cast<std::size_t>(r.range(1, 3));
                   const Matrix d = random_decision(r, a, k);
                   v.input("d", d);
                   v.equal("<<d>> = <d>", decision_of(d, Partition(k, a.size())), d);
                 }});
  out.push_back({"decision.restriction-inverse", {},
                 "the column of a decision's blocks is its restriction inverse, and each block of it is a restriction idempotent",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b);
                   const std::size_t k = static_cast<std::size_t>(r.range(1, 3));
                   const Matrix d = random_decision(r, a, k);
                   v.input("d", d);
                   const Matrix inv = decision_inverse(d, k);
                   v.check("restriction inverse", is_restriction_inverse(d, inv));
                   std::vector<MatObj> cs(k, a);
                   for (std::size_t j = 0; j < k; ++j) {
                     v.check("i_j d^o is a restriction idempotent",
                             restriction_idempotent(mat_compose(injection<ParBase>(cs, j), inv)));
                   }
                 }});
  out.push_back({"decision.separating", {}, "<f|g> followed by the j-th quasi-projection is the j-th restriction",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b), c = mobj(r, b);
                   const FinObj fa(total_size(a));
                   auto [f0, g0] = gen_disjoint_pair(r, fa, FinObj(1));
                   const Matrix f = unflatten(compose(restriction(f0), gen_partial_map(r, fa, FinObj(total_size(x)), 1.0)), a, x);
                   const Matrix g = unflatten(compose(restriction(g0), gen_partial_map(r, fa, FinObj(total_size(c)), 1.0)), a, c);
                   v.input("F", f);
                   v.input("G", g);
                   const Matrix d = separating_decision(f, g);
                   v.check("<f|g> is a decision", is_decision(d, 2));
                   v.equal("<f|g> p_1 = rf", mat_compose(d, quasi_projection<ParBase>({a, a}, 0)), mat_restriction(f));
                   v.equal("<f|g> p_2 = rg", mat_compose(d, quasi_projection<ParBase>({a, a}, 1)), mat_restriction(g));
                 }});
  out.push_back({"decision.separation-iso", {},
                 "f and g are decision-disjoint iff [rf; rg] is a restriction isomorphism, with inverse <f|g>",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b), c = mobj(r, b);
                   auto [f, g] = maybe_disjoint(r, a, x, c);
                   v.input("F", f);
                   v.input("G", g);
                   const Matrix m = copair(std::vector<Matrix>{mat_restriction(f), mat_restriction(g)}, a);
                   const auto inv = restriction_inverse(m);
                   const bool sep = perp_d(f, g);
                   v.check("separated iff invertible", sep == inv.has_value());
                   if (sep && inv) {
                     const Matrix d = separating_decision(f, g);
                     v.equal("inverse is <f|g>", *inv, d);
                     v.check("<f|g> is a restriction inverse", is_restriction_inverse(m, d));
                     v.check("the inverse relation is symmetric", is_restriction_inverse(d, m));
                   }
                 }});
  out.push_back({"decision.n-ary-separation", {}, "a family has a separating decision iff it is pairwise decision-disjoint",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b);
                   const int k = r.range(0, b.max_family);
                   std::vector<Matrix> fs = r.coin() ? gen_disjoint_matrices(r, a, x, k) : std::vector<Matrix>{};
                   while (static_cast<int>(fs.size()) < k) fs.push_back(gen_matrix(r, a, x));
                   bool pairwise = true;
                   for (std::size_t i = 0; i < fs.size(); ++i) {
                     v.input("F" + std::to_string(i), fs[i]);
                     for (std::size_t j = i + 1; j < fs.size(); ++j) pairwise = pairwise && perp_d(fs[i], fs[j]);
                   }
                   const auto d = try_separating_decision(fs, a);
                   v.check("separating decision exists iff pairwise disjoint", d.has_value() == pairwise);
                   if (d) v.check("it is a decision", is_decision(*d, fs.size()));
                 }});
  out.push_back({"mat.perp-d-entrywise", {}, "decision-disjointness is disjointness of the flat domains",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b), c = mobj(r, b);
                   auto [f, g] = maybe_disjoint(r, a, x, c);
                   v.input("F", f);
                   v.input("G", g);
                   v.check("perp_d iff flat domains disjoint",
                           perp_d(f, g) == ((flatten(f).support() & flatten(g).support()) == 0));
                 }});
  out.push_back({"mat.join-decision", {}, "the join of disjoint F and G is <F|G>(F+G) followed by the codiagonal",
                 [](Rng& r, const SizeBounds& b, const Hooks&, Verdict& v) {
                   const MatObj a = mobj(r, b), x = mobj(r, b);
                   const auto fam = gen_disjoint_matrices(r, a, x, 2);
                   v.input("F", fam[0]);
                   v.input("G", fam[1]);
                   v.equal("F join G", mat_join(fam[0], fam[1]),
                           mat_compose({separating_decision(fam[0], fam[1]), direct_sum(fam[0], fam[1]),
                                        codiagonal<ParBase>(x, 2)}));
                 }});
  return out;
}

}  // namespace iterlab::laws
