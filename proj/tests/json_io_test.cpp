#include <gtest/gtest.h>

#include "iterlab/gen.hpp"
#include "iterlab/json_io.hpp"
#include "support.hpp"

using namespace iterlab;
using namespace iterlab::test;

TEST(MapJson, Encoding) {
  const json j = map_to_json(pm(3, 2, {1, U, 0}));
  EXPECT_EQ(j, json::parse(R"({"dom":3,"cod":2,"table":[1,null,0]})"));
}

TEST(MapJson, Labels) {
  const json j = json::parse(R"({"dom":2,"cod":1,"table":[null,0],"dom_labels":["a","b"],"cod_labels":["done"]})");
  const PartialMap f = map_from_json(j);
  EXPECT_EQ(to_string(f), "{b->done}");
  EXPECT_EQ(map_to_json(f), j);
}

TEST(MapJson, Malformed) {
  EXPECT_THROW(map_from_json(json::parse(R"({"dom":2,"cod":1})")), FormatError);
  EXPECT_THROW(map_from_json(json::parse(R"({"dom":2,"cod":1,"table":[0]})")), Error);
  EXPECT_THROW(map_from_json(json::parse(R"({"dom":1,"cod":1,"table":[3]})")), Error);
  EXPECT_THROW(map_from_json(json::parse(R"([1,2])")), FormatError);
}

TEST(Property, RoundTrips) {
  Rng r(71);
  for (int i = 0; i < 300; ++i) {
    const FinObj a = gen_obj(r, 5), b = gen_obj(r, 5);
    const PartialMap f = gen_partial_map(r, a, b);
    ASSERT_EQ(map_from_json(json::parse(map_to_json(f).dump())), f);
    const MatObj ma = gen_matobj(r, 3, 3), mb = gen_matobj(r, 3, 3);
    const Matrix m = gen_matrix(r, ma, mb);
    ASSERT_EQ(matrix_from_json(json::parse(matrix_to_json(m).dump())), m);
    const DjMap s = gen_dj(r, a, b, 3);
    ASSERT_EQ(dj_from_json(json::parse(dj_to_json(s).dump())), s);
  }
}

TEST(RelationJson, RoundTrip) {
  const auto rel = InterferenceRel::custom({{2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}}}});
  const json j = relation_to_json(rel);
  EXPECT_EQ(relation_from_json(j), rel);
  EXPECT_EQ(relation_from_json(json::parse(R"({"object_size":2,"pairs":[[0,0],[0,1],[0,2],[0,3],[1,2]]})")), rel);
}
