#include <gtest/gtest.h>

#include "sumset/json_io.hpp"
#include "test_support.hpp"

namespace sumset {
namespace {

using testing::element;
using testing::expect_error;

template <typename T>
T round_trip(const T& value) {
  return parse_as<T>(dump(Json(value)));
}

TEST(Json, GroupElementEncoding) {
  auto x = element({{3, 2}, {10, 4}});
  EXPECT_EQ(Json(x), Json::parse(R"({"entries": {"3": 2, "10": 4}})"));
  EXPECT_EQ(round_trip(x), x);
  EXPECT_EQ(round_trip(GroupElement()), GroupElement());
  expect_error(ErrorKind::kParse, [] { parse_as<GroupElement>(R"({"entries": {"x": 1}})"); });
  expect_error(ErrorKind::kParse, [] { parse_as<GroupElement>(R"([[1, 2]])"); });
}

TEST(Json, PatternAndBits) {
  EXPECT_EQ(Json(make_pattern(2, 1)), Json::parse("[2, 2, 4]"));
  EXPECT_EQ(round_trip(make_pattern(3, 2)), make_pattern(3, 2));
  EXPECT_EQ(Json(BitSeq::from_string("0110")), Json("0110"));
  expect_error(ErrorKind::kParse, [] { parse_as<BitSeq>(R"("01a")"); });
}

TEST(Json, SimilarityTypes) {
  for (const auto& type : enumerate_types(3, 3)) EXPECT_EQ(round_trip(type), type);
  auto j = Json(similarity_type(testing::words({"00", "01"})));
  EXPECT_TRUE(j.contains("k"));
  EXPECT_TRUE(j.contains("pair_rank"));
  EXPECT_TRUE(j.contains("bit_matrix"));
}

TEST(Json, WorldAndTypeMaps) {
  auto w = testing::small_world(2);
  EXPECT_EQ(round_trip(*w), *w);
  auto j = Json(*w);
  EXPECT_EQ(j.at("depth"), w->depth());
  EXPECT_TRUE(j.at("embed").is_object());
  TypeMap table;
  table.colour_count = 2;
  for (const auto& type : enumerate_types(2, 2)) table.table[type] = 1;
  for (const auto& map : {TypeMap::constant_map(3, 1), TypeMap::hashed(2, 99), table})
    EXPECT_EQ(round_trip(map), map);
}

TEST(Json, CertificatesRoundTrip) {
  HomogeneousWitness hw{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, {20}, {0, 1, 0}};
  auto c = synthetic_colouring(hw, 2, 2);
  auto lemma = leader_extract(c, hw, 2, 5);
  EXPECT_EQ(round_trip(lemma), lemma);
  EXPECT_EQ(Json(lemma).at("schema"), kCertificateSchema);

  WorldColourings wc{2, 2, testing::pipeline_world(2), generate_type_maps(2, 2, 1)};
  EXPECT_EQ(round_trip(wc), wc);
  auto piped = run_pipeline(wc, 5);
  auto back = round_trip(piped);
  EXPECT_EQ(back, piped);
  EXPECT_TRUE(verify_certificate(certificate_colouring(back), back).ok);
}

TEST(Json, WrongSchemaIsRejected) {
  HomogeneousWitness hw{{1, 2, 3, 4, 5, 6, 7, 8}, {}, {0, 0}};
  auto cert = leader_extract(synthetic_colouring(hw, 1, 1), hw, 1, 4);
  auto j = Json(cert);
  j["schema"] = "cert_v0";
  expect_error(ErrorKind::kParse, [&] { parse_as<ExtractionCertificate>(j.dump()); });
}

TEST(Json, Reports) {
  auto report = find_bad_colouring(AdditiveStructure::interval(8), 2, 2);
  EXPECT_EQ(round_trip(report), report);
  auto estimate = estimate_r(AdditiveStructure::cyclic(3), 2, 3);
  EXPECT_EQ(round_trip(estimate), estimate);
  EXPECT_FALSE(Json(report).at("stats").contains("wall_time"));
}

TEST(Json, DumpIsCanonical) {
  auto j = Json::parse(R"({"b": 1, "a": [1, 2]})");
  EXPECT_EQ(dump(j), "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
  expect_error(ErrorKind::kParse, [] { parse_as<Json>("{not json"); });
}

TEST(Json, Files) {
  expect_error(ErrorKind::kParse, [] { read_file("/nonexistent/dir/file.json"); });
}

}  // namespace
}  // namespace sumset
