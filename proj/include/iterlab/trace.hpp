#pragma once

#include <functional>

#include "iterlab/matext.hpp"

namespace iterlab {

template <class B>
using BaseWandFn = std::function<typename B::Map(const typename B::Map&, const typename B::Map&)>;

template <class B>
BaseWandFn<B> default_base_wand() {
  return [](const typename B::Map& f, const typename B::Map& g) { return B::wand(f, g); };
}

template <class B>
using MatWandFn = std::function<BasicMatrix<B>(const BasicMatrix<B>&, const BasicMatrix<B>&)>;
template <class B>
using IterFn = std::function<BasicMatrix<B>(const BasicMatrix<B>&)>;
// Trace out the first `cut` parts.
template <class B>
using TraceFn = std::function<BasicMatrix<B>(const BasicMatrix<B>&, std::size_t)>;

template <class B>
BasicMatrix<B> trace_n(const BasicMatrix<B>& g, std::size_t cut, const BaseWandFn<B>& w = default_base_wand<B>());

namespace detail {

template <class B>
void require_traceable(const BasicMatrix<B>& g, std::size_t cut, const char* what) {
  if (cut > g.rows() || cut > g.cols()) {
    throw ShapeError(std::string(what) + ": cannot trace out " + std::to_string(cut) + " parts of a " +
                     std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " matrix");
  }
  for (std::size_t i = 0; i < cut; ++i) {
    if (!(g.dom()[i] == g.cod()[i])) {
      throw ShapeError(std::string(what) + ": traced part " + std::to_string(i) + " differs between domain " +
                       g.dom()[i].describe() + " and codomain " + g.cod()[i].describe());
    }
  }
}

}  // namespace detail

// Iteration of f: X -> X + A, where X is f's whole domain. Single-part X uses the base
// wand entrywise; longer X traces the duplicated-row matrix [f; f].
template <class B>
BasicMatrix<B> iterate(const BasicMatrix<B>& f, const BaseWandFn<B>& w = default_base_wand<B>()) {
  const std::size_t x = f.rows();
  detail::require_traceable(f, x, "iterate");
  const MatObj a = slice(f.cod(), x, f.cols());
  if (x == 0) return BasicMatrix<B>::zero({}, a);
  if (x == 1) {
    using Map = typename B::Map;
    std::vector<Map> e;
    for (std::size_t j = 1; j < f.cols(); ++j) e.push_back(w(f.at(0, 0), f.at(0, j)));
    return BasicMatrix<B>(f.dom(), a, std::move(e));
  }
  return trace_n(copair(std::vector<BasicMatrix<B>>{f, f}, f.cod()), x, w);
}

// G: X + A -> X + B with X the first x parts: G4 join G3 (G1 wand G2).
template <class B>
BasicMatrix<B> trace2(const BasicMatrix<B>& g, std::size_t x, const BaseWandFn<B>& w = default_base_wand<B>()) {
  detail::require_traceable(g, x, "trace");
  const BasicMatrix<B> top = submatrix(g, 0, x, 0, g.cols());
  const BasicMatrix<B> g3 = submatrix(g, x, g.rows(), 0, x);
  const BasicMatrix<B> g4 = submatrix(g, x, g.rows(), x, g.cols());
  return mat_join(g4, mat_compose(g3, iterate(top, w)));
}

// Peels the traced parts one at a time, left to right.
template <class B>
BasicMatrix<B> trace_n(const BasicMatrix<B>& g, std::size_t cut, const BaseWandFn<B>& w) {
  detail::require_traceable(g, cut, "trace");
  BasicMatrix<B> h = g;
  for (std::size_t i = 0; i < cut; ++i) h = trace2(h, 1, w);
  return h;
}

// Permutation matrix obj' -> obj with obj'[i] = obj[order[i]].
template <class B>
BasicMatrix<B> reorder(const MatObj& obj, const std::vector<std::size_t>& order) {
  MatObj src;
  for (std::size_t i : order) src.push_back(obj.at(i));
  using Map = typename B::Map;
  std::vector<Map> e;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < obj.size(); ++j) {
      e.push_back(order[i] == j ? B::identity(obj[j]) : B::zero(src[i], obj[j]));
    }
  }
  return BasicMatrix<B>(std::move(src), obj, std::move(e));
}

// Trace out part k alone by moving it to the front on both sides.
template <class B>
BasicMatrix<B> trace_part(const BasicMatrix<B>& g, std::size_t k, const BaseWandFn<B>& w = default_base_wand<B>()) {
  if (k >= g.rows() || k >= g.cols() || !(g.dom()[k] == g.cod()[k])) {
    throw ShapeError("trace_part: part " + std::to_string(k) + " is not shared by domain and codomain");
  }
  auto front = [k](std::size_t n) {
    std::vector<std::size_t> order{k};
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k) order.push_back(i);
    }
    return order;
  };
  auto rows = front(g.rows());
  auto cols = front(g.cols());
  std::vector<std::size_t> inv(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) inv[cols[i]] = i;
  MatObj cod2;
  for (std::size_t i : cols) cod2.push_back(g.cod()[i]);
  const BasicMatrix<B> moved = mat_compose(mat_compose(reorder<B>(g.dom(), rows), g), reorder<B>(cod2, inv));
  return trace2(moved, 1, w);
}

template <class B>
BasicMatrix<B> mat_power(const BasicMatrix<B>& f, std::size_t n) {
  BasicMatrix<B> acc = BasicMatrix<B>::identity(f.dom());
  for (std::size_t i = 0; i < n; ++i) acc = mat_compose(acc, f);
  return acc;
}

// G4 joined with G3 G1^n G2 for n = 0 .. (points of X).
template <class B>
BasicMatrix<B> trace_closed_form(const BasicMatrix<B>& g, std::size_t x) {
  detail::require_traceable(g, x, "trace");
  const auto g1 = submatrix(g, 0, x, 0, x);
  const auto g2 = submatrix(g, 0, x, x, g.cols());
  const auto g3 = submatrix(g, x, g.rows(), 0, x);
  BasicMatrix<B> acc = submatrix(g, x, g.rows(), x, g.cols());
  BasicMatrix<B> walk = g3;
  const int bound = total_size(slice(g.dom(), 0, x));
  for (int n = 0; n <= bound; ++n) {
    acc = mat_join(acc, mat_compose(walk, g2));
    walk = mat_compose(walk, g1);
  }
  return acc;
}

// Conversions between wands, iteration and trace.
template <class B>
BasicMatrix<B> iter_from_wand(const MatWandFn<B>& wand, const BasicMatrix<B>& f) {
  const std::size_t x = f.rows();
  detail::require_traceable(f, x, "iter_from_wand");
  return wand(submatrix(f, 0, x, 0, x), submatrix(f, 0, x, x, f.cols()));
}

template <class B>
BasicMatrix<B> wand_from_iter(const IterFn<B>& iter, const BasicMatrix<B>& f, const BasicMatrix<B>& g) {
  return iter(tuple_row(std::vector<BasicMatrix<B>>{f, g}, f.dom()));
}

template <class B>
BasicMatrix<B> iter_from_trace(const TraceFn<B>& trace, const BasicMatrix<B>& f) {
  return trace(copair(std::vector<BasicMatrix<B>>{f, f}, f.cod()), f.rows());
}

template <class B>
BasicMatrix<B> trace_from_iter(const IterFn<B>& iter, const BasicMatrix<B>& g, std::size_t x) {
  detail::require_traceable(g, x, "trace_from_iter");
  return mat_join(submatrix(g, x, g.rows(), x, g.cols()),
                  mat_compose(submatrix(g, x, g.rows(), 0, x), iter(submatrix(g, 0, x, 0, g.cols()))));
}

// Copairing form: i_2 G [Iter(i_1 G); 1_B].
template <class B>
BasicMatrix<B> trace_from_iter_copairing(const IterFn<B>& iter, const BasicMatrix<B>& g, std::size_t x) {
  detail::require_traceable(g, x, "trace_from_iter");
  const MatObj xs = slice(g.dom(), 0, x);
  const MatObj as = slice(g.dom(), x, g.rows());
  const MatObj bs = slice(g.cod(), x, g.cols());
  const auto i1g = mat_compose(injection<B>({xs, as}, 0), g);
  const auto i2g = mat_compose(injection<B>({xs, as}, 1), g);
  const auto back = copair(std::vector<BasicMatrix<B>>{iter(i1g), BasicMatrix<B>::identity(bs)}, bs);
  return mat_compose(i2g, back);
}

// Matrix wand computed on the flat view with the base wand.
Matrix flat_matrix_wand(const Matrix& f, const Matrix& g);

}  // namespace iterlab
