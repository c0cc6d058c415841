#include <gtest/gtest.h>

#include "sumset/world.hpp"
#include "sumset/world_gen.hpp"
#include "test_support.hpp"

namespace sumset {
namespace {

using testing::expect_error;

EmbeddedWorld complete_world(std::size_t depth) {
  WorldGenOptions o;
  o.mode = WorldGenOptions::Mode::kComplete;
  o.depth = depth;
  return generate_world(o);
}

EmbeddedWorld hand_world(std::initializer_list<const char*> images) {
  std::map<Coord, BitSeq> embed;
  Coord i = 0;
  std::size_t depth = 0;
  for (const char* image : images) {
    embed.emplace(i++, BitSeq::from_string(image));
    depth = embed.rbegin()->second.depth();
  }
  return EmbeddedWorld(depth, std::move(embed));
}

TEST(EmbeddedWorld, BasicAccess) {
  auto w = hand_world({"00", "01", "11"});
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.depth(), 2u);
  EXPECT_EQ(w.image(1).to_string(), "01");
  EXPECT_EQ(w.delta_f(0, 2), 0u);
  expect_error(ErrorKind::kDomain, [&] { w.image(7); });
}

TEST(EmbeddedWorld, RejectsNonInjectiveAndMixedDepths) {
  expect_error(ErrorKind::kInvalidArgument, [] { hand_world({"01", "01"}); });
  expect_error(ErrorKind::kDepth, [] {
    EmbeddedWorld(2, {{0, BitSeq::from_string("01")}, {1, BitSeq::from_string("011")}});
  });
}

TEST(EmbeddedWorld, Restriction) {
  auto w = complete_world(3);
  auto sub = w.restricted(std::vector<Coord>{1, 4, 6});
  EXPECT_EQ(sub.indices(), (std::vector<Coord>{1, 4, 6}));
  EXPECT_EQ(sub.image(4), w.image(4));
  expect_error(ErrorKind::kDomain, [&] { w.restricted(std::vector<Coord>{1, 99}); });
}

TEST(FSimilar, ReflexiveAndSingletons) {
  auto w = complete_world(3);
  std::vector<Coord> a{1, 3, 6};
  EXPECT_TRUE(f_similar(w, a, a));
  for (Coord x = 0; x < 8; ++x)
    EXPECT_TRUE(f_similar(w, std::vector<Coord>{0}, std::vector<Coord>{x}));
}

TEST(FSimilar, OppositeBitOrdersDiffer) {
  auto w = hand_world({"00", "01", "11", "10"});
  EXPECT_FALSE(f_similar(w, std::vector<Coord>{0, 1}, std::vector<Coord>{2, 3}));
  EXPECT_TRUE(f_similar(w, std::vector<Coord>{0, 1}, std::vector<Coord>{0, 2}));
}

TEST(FSimilar, Errors) {
  auto w = complete_world(2);
  expect_error(ErrorKind::kDomain,
               [&] { f_similar(w, std::vector<Coord>{0, 9}, std::vector<Coord>{0, 1}); });
  expect_error(ErrorKind::kInvalidArgument,
               [&] { f_similar(w, std::vector<Coord>{0}, std::vector<Coord>{0, 1}); });
}

TEST(TypeMap, Kinds) {
  auto t = similarity_type(testing::words({"00", "01"}));
  EXPECT_EQ(TypeMap::constant_map(3, 2).colour_of(t), 2u);
  auto h = TypeMap::hashed(3, 42);
  EXPECT_LT(h.colour_of(t), 3u);
  EXPECT_EQ(h.colour_of(t), TypeMap::hashed(3, 42).colour_of(t));
  TypeMap table;
  table.colour_count = 2;
  expect_error(ErrorKind::kIncompleteMap, [&] { table.colour_of(t); });
  table.table[t] = 1;
  EXPECT_EQ(table.colour_of(t), 1u);
}

TEST(InduceFromTypes, ConstantMapGivesConstantColouring) {
  auto w = std::make_shared<const EmbeddedWorld>(complete_world(3));
  auto d = induce_from_types({3, TypeMap::constant_map(2, 0), w});
  for_each_subset<Coord>(std::span<const Coord>(w->indices()), 3, [&](std::span<const Coord> t) {
    EXPECT_EQ(d(t), 0u);
    return true;
  });
}

TEST(InduceFromTypes, DistinguishesSplitOrientations) {
  auto w = std::make_shared<const EmbeddedWorld>(hand_world({"00", "01", "11", "10"}));
  auto up = similarity_type(testing::words({"00", "01"}));
  auto down = similarity_type(testing::words({"01", "00"}));
  TypeMap map;
  map.colour_count = 2;
  map.table = {{up, 0}, {down, 1}};
  auto d = induce_from_types({2, map, w});
  for_each_subset<Coord>(std::span<const Coord>(w->indices()), 2, [&](std::span<const Coord> t) {
    bool ascending = w->image(t[0]) < w->image(t[1]);
    EXPECT_EQ(d(t), ascending ? 0u : 1u);
    return true;
  });
}

TEST(InduceFromTypes, EmptyWorld) {
  auto w = std::make_shared<const EmbeddedWorld>(4, std::map<Coord, BitSeq>{});
  auto d = induce_from_types({2, TypeMap::constant_map(2, 0), w});
  ASSERT_TRUE(d.index_set().has_value());
  EXPECT_TRUE(d.index_set()->empty());
  expect_error(ErrorKind::kDomain, [&] { d(std::vector<Coord>{0, 1}); });
}

TEST(InduceFromTypes, IncompleteTableIsReported) {
  auto w = std::make_shared<const EmbeddedWorld>(complete_world(3));
  TypeMap map;
  map.colour_count = 2;
  map.table[similarity_type(testing::words({"000", "001", "010"}))] = 0;
  expect_error(ErrorKind::kIncompleteMap, [&] { induce_from_types({3, map, w}); });
}

TEST(IsFCanonical, ConstantAndInducedColourings) {
  auto w = std::make_shared<const EmbeddedWorld>(complete_world(3));
  SetColouring constant(3, [](std::span<const Coord>) { return Colour{1}; });
  EXPECT_TRUE(is_f_canonical(constant, *w).canonical);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto d = induce_from_types({k, TypeMap::hashed(3, 7 + k), w});
    auto res = is_f_canonical(d, *w);
    EXPECT_TRUE(res.canonical);
    EXPECT_EQ(res.tuples_checked, binomial(8, k));
  }
}

TEST(IsFCanonical, FlippedTupleIsCaught) {
  auto w = std::make_shared<const EmbeddedWorld>(complete_world(3));
  auto base = induce_from_types({2, TypeMap::hashed(2, 3), w});
  const std::vector<Coord> flipped{2, 5};
  SetColouring d(2, [&](std::span<const Coord> t) {
    Colour c = base(t);
    return std::vector<Coord>(t.begin(), t.end()) == flipped ? 1 - c : c;
  });
  auto res = is_f_canonical(d, *w);
  ASSERT_FALSE(res.canonical);
  ASSERT_TRUE(res.witness.has_value());
  const auto& [a, b] = *res.witness;
  EXPECT_TRUE(f_similar(*w, a, b));
  EXPECT_NE(d(a), d(b));
  EXPECT_TRUE(a == flipped || b == flipped);
}

TEST(IsFCanonical, TupleLimit) {
  auto w = complete_world(6);
  SetColouring d(4, [](std::span<const Coord>) { return Colour{0}; });
  expect_error(ErrorKind::kResource, [&] { is_f_canonical(d, w, 100); });
}

TEST(WorldGen, DeterministicAndOrderPreserving) {
  for (auto mode : {WorldGenOptions::Mode::kComb, WorldGenOptions::Mode::kRandom}) {
    WorldGenOptions o;
    o.mode = mode;
    o.size = 200;
    o.depth = 200;
    o.teeth = 3;
    o.seed = 11;
    auto a = generate_world(o);
    EXPECT_EQ(a, generate_world(o));
    EXPECT_EQ(a.size(), 200u);
    for (std::size_t i = 1; i < a.size(); ++i)
      ASSERT_LT(a.image(a.indices()[i - 1]), a.image(a.indices()[i]));
    o.seed = 12;
    EXPECT_NE(a, generate_world(o));
  }
}

TEST(WorldGen, CompleteTree) {
  auto w = complete_world(4);
  EXPECT_EQ(w.size(), 16u);
  EXPECT_EQ(w.image(5).to_string(), "0101");
  WorldGenOptions o;
  o.mode = WorldGenOptions::Mode::kComplete;
  o.depth = 21;
  expect_error(ErrorKind::kInvalidArgument, [&] { generate_world(o); });
}

TEST(WorldGen, TooShallowIsReported) {
  WorldGenOptions o;
  o.size = 4096;
  o.depth = 8;
  expect_error(ErrorKind::kInvalidArgument, [&] { generate_world(o); });
}

TEST(WorldGen, TypeMapsPerArity) {
  auto maps = generate_type_maps(3, 3, 5);
  ASSERT_EQ(maps.size(), 4u);
  for (const auto& m : maps) EXPECT_EQ(m.colour_count, 3u);
  EXPECT_EQ(maps, generate_type_maps(3, 3, 5));
  EXPECT_NE(maps, generate_type_maps(3, 3, 6));
}

}  // namespace
}  // namespace sumset
