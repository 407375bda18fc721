#include <gtest/gtest.h>

#include "iterlab/errors.hpp"
#include "iterlab/gen.hpp"
#include "iterlab/matext.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

namespace {

Matrix row(std::vector<PartialMap> entries) {
  MatObj dom{entries.at(0).dom()}, cod;
  for (const auto& e : entries) cod.push_back(e.cod());
  return Matrix(dom, cod, std::move(entries));
}

}  // namespace

TEST(MatCompose, IdentityIsNeutral) {
  Rng r(51);
  const MatObj a{FinObj(2), FinObj(3)}, b{FinObj(1), FinObj(2)};
  const Matrix g = gen_matrix(r, a, b);
  EXPECT_EQ(mat_compose(Matrix::identity(a), g), g);
  EXPECT_EQ(mat_compose(g, Matrix::identity(b)), g);
}

TEST(MatCompose, RowTimesColumnIsJoinOfProducts) {
  const PartialMap f = pm(3, 2, {0, U, U}), g = pm(3, 2, {U, 1, U});
  const PartialMap h = pm(2, 2, {1, U}), k = pm(2, 2, {U, 0});
  const Matrix col({FinObj(2), FinObj(2)}, {FinObj(2)}, {h, k});
  const Matrix prod = mat_compose(row({f, g}), col);
  EXPECT_EQ(prod, Matrix::single(join(compose(f, h), compose(g, k))));
  EXPECT_EQ(prod, Matrix::single(pm(3, 2, {1, 0, U})));
}

TEST(MatCompose, WorkedEntrywiseExample) {
  const FinObj x(2), a(1);
  const Matrix f = row({pm(2, 2, {1, U}), pm(2, 1, {U, 0})});
  const Matrix g({x, a}, {x, a}, {pm(2, 2, {U, 1}), zero(x, a), zero(a, x), identity(a)});
  EXPECT_EQ(mat_compose(f, g), f);
}

TEST(MatCompose, ShapeMismatch) {
  EXPECT_THROW(mat_compose(Matrix::identity({FinObj(2)}), Matrix::identity({FinObj(3)})), ShapeError);
}

TEST(Matrix, RowsMustBeDisjoint) {
  EXPECT_THROW(row({pm(2, 2, {1, U}), pm(2, 1, {0, U})}), PreconditionError);
}

TEST(MatRestriction, Examples) {
  const PartialMap f = pm(3, 2, {0, U, U}), g = pm(3, 1, {U, U, 0});
  EXPECT_EQ(mat_restriction(row({f, g})), Matrix::single(join(restriction(f), restriction(g))));
  const MatObj a{FinObj(2), FinObj(1)};
  EXPECT_EQ(mat_restriction(Matrix::zero(a, a)), Matrix::zero(a, a));
  EXPECT_EQ(mat_restriction(Matrix::identity(a)), Matrix::identity(a));
}

// Worked decision in the base model: f: X3 -> Y + Z sends 0 into Y and 2 into Z.
TEST(Decision, BaseExample) {
  const FinObj x(3), y(1), z(1);
  const Matrix f = row({pm(3, 1, {0, U, U}), pm(3, 1, {U, U, 0})});
  const Matrix d = decision_of(f, Partition{1, 1});
  EXPECT_EQ(d, row({pm(3, 3, {0, U, U}), pm(3, 3, {U, U, 2})}));
  EXPECT_TRUE(is_decision(d, 2));
}

TEST(Decision, OfZeroAndOfInjection) {
  const MatObj x{FinObj(3)};
  EXPECT_EQ(decision_of(Matrix::zero(x, {FinObj(3), FinObj(3)}), Partition{1, 1}), Matrix::zero(x, repeat(x, 2)));
  const Matrix i1 = injection<ParBase>({x, x}, 0);
  EXPECT_EQ(decision_of(i1, Partition{1, 1}), row({identity(FinObj(3)), zero(FinObj(3), FinObj(3))}));
}

TEST(SeparatingDecision, Example) {
  const Matrix f = Matrix::single(pm(3, 3, {1, U, U})), g = Matrix::single(pm(3, 3, {U, U, 0}));
  EXPECT_EQ(separating_decision(f, g), row({pm(3, 3, {0, U, U}), pm(3, 3, {U, U, 2})}));
  EXPECT_THROW(separating_decision(f, f), PreconditionError);
  EXPECT_FALSE(try_separating_decision(std::vector<Matrix>{f, f}, f.dom()).has_value());
}

TEST(MatJoin, EntrywiseUnion) {
  const PartialMap f = pm(3, 2, {0, U, U}), g = pm(3, 1, {U, U, 0});
  const Matrix a = row({f, zero(FinObj(3), FinObj(1))}), b = row({zero(FinObj(3), FinObj(2)), g});
  EXPECT_TRUE(perp_d(a, b));
  EXPECT_EQ(mat_join(a, b), row({f, g}));
  EXPECT_THROW(mat_join(a, a), PreconditionError);
}

TEST(Structure, SymmetryIsAnInvolutionAndCodiagonalMerges) {
  const MatObj a{FinObj(2)}, b{FinObj(1), FinObj(3)};
  EXPECT_EQ(mat_compose(symmetry<ParBase>(a, b), symmetry<ParBase>(b, a)), Matrix::identity(concat(a, b)));
  EXPECT_EQ(mat_compose(injection<ParBase>({a, a}, 1), codiagonal<ParBase>(a, 2)), Matrix::identity(a));
  EXPECT_EQ(mat_compose(injection<ParBase>({a, b}, 0), quasi_projection<ParBase>({a, b}, 0)), Matrix::identity(a));
}

TEST(Property, FlatViewRoundTripsAndComposes) {
  Rng r(52);
  for (int i = 0; i < 500; ++i) {
    const MatObj a = gen_matobj(r, 3, 4), b = gen_matobj(r, 3, 4), c = gen_matobj(r, 3, 4);
    const Matrix f = gen_matrix(r, a, b), g = gen_matrix(r, b, c);
    ASSERT_EQ(unflatten(flatten(f), a, b), f);
    ASSERT_EQ(flatten(mat_compose(f, g)), compose(flatten(f), flatten(g)));
  }
}

TEST(Property, RestrictionInverseExactlyForInjectiveMaps) {
  Rng r(53);
  for (int i = 0; i < 500; ++i) {
    const MatObj a = gen_matobj(r, 3, 3), b = gen_matobj(r, 3, 3);
    const Matrix f = gen_matrix(r, a, b);
    const PartialMap flat = flatten(f);
    std::set<int> hit;
    bool injective = true;
    for (int x = 0; x < flat.dom().size(); ++x) {
      if (auto y = flat(x)) injective = injective && hit.insert(*y).second;
    }
    const auto inv = restriction_inverse(f);
    ASSERT_EQ(inv.has_value(), injective);
    if (inv) ASSERT_TRUE(is_restriction_inverse(f, *inv));
  }
}
