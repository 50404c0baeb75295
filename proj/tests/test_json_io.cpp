#include <gtest/gtest.h>

#include "tamaripop/json_io.hpp"
#include "tamaripop/permutation.hpp"
#include "tamaripop/pop.hpp"
#include "tamaripop/series.hpp"

namespace tamaripop {
namespace {

TEST(JsonIo, Path) {
  EXPECT_EQ(to_json(parse_path("NENE")).dump(), "\"NENE\"");
  EXPECT_EQ(path_from_json(Json("NNEE")), parse_path("NNEE"));
  EXPECT_THROW(path_from_json(Json(3)), std::invalid_argument);
  EXPECT_THROW(path_from_json(Json("NX")), std::invalid_argument);
}

TEST(JsonIo, Vector) {
  const auto v = BracketVector::from_entries(tamari_context(3), std::vector<int>{2, 0, 1, 1, 2, 2});
  EXPECT_EQ(to_json(v).dump(), R"({"nu":"ENENE","entries":[2,0,1,1,2,2]})");
  EXPECT_EQ(vector_from_json(to_json(v)), v);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"nu":"ENENE"})")), std::invalid_argument);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"nu":"ENENE","entries":[1,1,1,1,2,2]})")), std::invalid_argument);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"nu":"ENENE","entries":[2,0,"1",1,2,2]})")), std::invalid_argument);
}

TEST(JsonIo, Permutation) {
  EXPECT_EQ(to_json(parse_permutation("231")).dump(), "[2,3,1]");
  EXPECT_EQ(permutation_from_json(Json::parse("[2,3,1]")), parse_permutation("231"));
  EXPECT_THROW(permutation_from_json(Json::parse("[2,2]")), std::invalid_argument);
  EXPECT_THROW(permutation_from_json(Json("231")), std::invalid_argument);
}

TEST(JsonIo, Trajectory) {
  const auto v = BracketVector::from_entries(tamari_context(3), std::vector<int>{2, 0, 1, 1, 2, 2});
  const auto j = to_json(pop_trajectory(v));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["entries"].dump(), "[1,0,1,1,2,2]");
  EXPECT_EQ(vector_from_json(j[2]), BracketVector::minimum(tamari_context(3)));
}

TEST(JsonIo, PolynomialKeysDescending) {
  EXPECT_EQ(to_json(pop_polynomial(4)).dump(), R"({"3":1,"2":3})");
  PopPolynomial p;
  p.coeffs = {{2, 5}, {10, 1}};
  EXPECT_EQ(to_json(p).dump(), R"({"10":1,"2":5})");
}

TEST(JsonIo, SeriesAsDecimalStrings) {
  IntSeries s(2);
  s[1] = BigInt("123456789012345678901234567890");
  EXPECT_EQ(to_json(s).dump(), R"(["0","123456789012345678901234567890","0"])");
}

}  // namespace
}  // namespace tamaripop
