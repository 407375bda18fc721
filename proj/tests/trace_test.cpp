#include <gtest/gtest.h>

#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/oracle.hpp"
#include "iterlab/trace.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

namespace {

Matrix iter_row(const PartialMap& f1, const PartialMap& f2) {
  return Matrix({f1.dom()}, {f1.cod(), f2.cod()}, {f1, f2});
}

}  // namespace

TEST(Iterate, ThreeStateLoop) {
  EXPECT_EQ(iterate(iter_row(pm(3, 3, {1, 2, U}), pm(3, 1, {U, U, 0}))), Matrix::single(pm(3, 1, {0, 0, 0})));
}

TEST(Iterate, ZeroBodyGivesTheExit) {
  const PartialMap f2 = pm(3, 2, {1, U, 0});
  EXPECT_EQ(iterate(iter_row(zero(FinObj(3), FinObj(3)), f2)), Matrix::single(f2));
}

TEST(Iterate, TotalBodyGivesZero) {
  const PartialMap f1 = pm(3, 3, {1, 2, 0});
  EXPECT_EQ(iterate(iter_row(f1, zero(FinObj(3), FinObj(2)))), Matrix::single(zero(FinObj(3), FinObj(2))));
}

TEST(Trace2, Yanking) {
  for (int n = 0; n <= 4; ++n) {
    const MatObj x{FinObj(n)};
    EXPECT_EQ(trace2(symmetry<ParBase>(x, x), 1), Matrix::identity(x));
  }
}

TEST(Trace2, FeedbackThroughTwoPoints) {
  const FinObj x(2), a(1);
  const Matrix g({x, a}, {x, a}, {pm(2, 2, {1, U}), pm(2, 1, {U, 0}), pm(1, 2, {0}), zero(a, a)});
  EXPECT_EQ(trace2(g, 1), Matrix::single(pm(1, 1, {0})));
}

TEST(Trace2, NoFeedbackPathGivesG4) {
  Rng r(61);
  const MatObj x{FinObj(3)}, a{FinObj(2)};
  const Matrix full = gen_matrix(r, concat(x, a), concat(x, a));
  const Matrix g({FinObj(3), FinObj(2)}, {FinObj(3), FinObj(2)},
                 {full.at(0, 0), full.at(0, 1), zero(FinObj(2), FinObj(3)), full.at(1, 1)});
  EXPECT_EQ(trace2(g, 1), submatrix(g, 1, 2, 1, 2));
}

TEST(TraceN, CutZeroAndNestings) {
  Rng r(62);
  for (int i = 0; i < 200; ++i) {
    const MatObj obj{gen_obj(r, 3), gen_obj(r, 3), gen_obj(r, 3)};
    const Matrix g = gen_matrix(r, obj, obj);
    ASSERT_EQ(trace_n(g, 0), g);
    const Matrix both = trace_n(g, 2);
    ASSERT_EQ(both, trace_n(trace_n(g, 1), 1));
    ASSERT_EQ(both, trace_n(trace_part(g, 1), 1));
  }
}

TEST(TraceN, RejectsMismatchedParts) {
  const Matrix g = Matrix::zero({FinObj(2)}, {FinObj(3)});
  EXPECT_THROW(trace_n(g, 1), ShapeError);
  EXPECT_THROW(trace_n(g, 2), ShapeError);
}

TEST(Property, TraceMatchesFeedbackSimulationAndClosedForm) {
  Rng r(63);
  for (int i = 0; i < 1000; ++i) {
    const MatObj x = gen_matobj(r, 2, 4), a = gen_matobj(r, 2, 4), b = gen_matobj(r, 2, 4);
    const Matrix g = gen_matrix(r, concat(x, a), concat(x, b));
    const Matrix t = trace_n(g, x.size());
    ASSERT_EQ(t, trace_by_simulation(g, x.size()));
    ASSERT_EQ(t, trace_closed_form(g, x.size()));
  }
}

TEST(Property, WandFromIterationIsTheKleeneWand) {
  Rng r(64);
  const IterFn<ParBase> it = [](const Matrix& f) { return iterate(f); };
  const MatWandFn<ParBase> flat = flat_matrix_wand;
  for (int i = 0; i < 500; ++i) {
    const FinObj x = gen_obj(r, 6), a = gen_obj(r, 4);
    auto [f, g] = gen_disjoint_pair(r, x, a);
    ASSERT_EQ(wand_from_iter(it, Matrix::single(f), Matrix::single(g)), Matrix::single(kleene_wand(f, g)));
    const Matrix step = iter_row(f, g);
    ASSERT_EQ(iter_from_wand(flat, step), iterate(step));
  }
  const PartialMap g = pm(2, 1, {0, U});
  EXPECT_EQ(wand_from_iter(it, Matrix::single(zero(FinObj(2), FinObj(2))), Matrix::single(g)), Matrix::single(g));
}
