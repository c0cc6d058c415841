#include <gtest/gtest.h>

#include <random>

#include "sumset/hash.hpp"
#include "sumset/ramsey.hpp"
#include "test_support.hpp"

namespace sumset {
namespace {

using testing::expect_error;

// Naive oracle: is there an a×b rectangle of one colour?
bool rectangle_exists(const GridColouring& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> rows(g.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  bool found = false;
  for_each_subset<std::size_t>(rows, a, [&](std::span<const std::size_t> chosen) {
    for (Colour c = 0; c < g.colour_count() && !found; ++c) {
      std::size_t cols = 0;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        bool all = true;
        for (auto i : chosen) all = all && g(i, j) == c;
        cols += all;
      }
      found = cols >= b;
    }
    return !found;
  });
  return found;
}

TEST(ColexRank, IsABijection) {
  std::vector<std::size_t> ground{0, 1, 2, 3, 4, 5};
  std::vector<bool> seen(binomial(6, 3), false);
  for_each_subset<std::size_t>(ground, 3, [&](std::span<const std::size_t> t) {
    auto rank = colex_rank(t);
    EXPECT_LT(rank, seen.size());
    EXPECT_FALSE(seen[rank]);
    seen[rank] = true;
    return true;
  });
}

TEST(Ramsey, ConstantColouringGivesFirstIndices) {
  auto h = HypergraphColouring::from_rule(8, 2, 2, [](auto) { return Colour{1}; });
  EXPECT_EQ(ramsey_homogeneous(h, 5), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Ramsey, PentagonHasNoMonochromaticTriangle) {
  auto h = HypergraphColouring::from_rule(5, 2, 2, [](std::span<const std::size_t> t) {
    std::size_t d = t[1] - t[0];
    return Colour(d == 1 || d == 4 ? 0 : 1);
  });
  EXPECT_EQ(ramsey_homogeneous(h, 3), std::nullopt);
  EXPECT_TRUE(ramsey_homogeneous(h, 2).has_value());
}

TEST(Ramsey, SixPointsAlwaysHaveATriangleSampled) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Colour> table(15);
    for (auto& c : table) c = rng() & 1;
    HypergraphColouring h(6, 2, 2, table);
    EXPECT_TRUE(ramsey_homogeneous(h, 3).has_value());
  }
}

TEST(Ramsey, PigeonholeInDimensionOne) {
  auto h = HypergraphColouring::from_rule(7, 1, 3, [](std::span<const std::size_t> t) {
    return Colour(t[0] % 3);
  });
  auto found = ramsey_homogeneous(h, 3);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, (std::vector<std::size_t>{0, 3, 6}));
  EXPECT_EQ(ramsey_homogeneous(h, 4), std::nullopt);
}

TEST(Ramsey, AdmissibleFilter) {
  auto h = HypergraphColouring::from_rule(6, 2, 2, [](auto) { return Colour{0}; });
  EXPECT_EQ(ramsey_homogeneous(h, 3, {}, [](Colour c) { return c == 1; }), std::nullopt);
}

TEST(Ramsey, MonotoneInTarget) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Colour> table(binomial(7, 2));
    for (auto& c : table) c = rng() & 1;
    HypergraphColouring h(7, 2, 2, table);
    bool previous = true;
    for (std::size_t t = 1; t <= 7; ++t) {
      bool ok = ramsey_homogeneous(h, t).has_value();
      if (ok) EXPECT_TRUE(previous);
      previous = ok;
    }
  }
}

TEST(Ramsey, BudgetIsAResourceError) {
  auto h = HypergraphColouring::from_rule(40, 2, 2, [](std::span<const std::size_t> t) {
    return Colour(mix64(t[0] * 64 + t[1]) & 1);
  });
  expect_error(ErrorKind::kResource, [&] { ramsey_homogeneous(h, 8, SearchLimits{50}); });
}

TEST(Ramsey, RejectsBadTables) {
  expect_error(ErrorKind::kInvalidArgument,
               [] { HypergraphColouring(4, 2, 2, std::vector<Colour>(5, 0)); });
  expect_error(ErrorKind::kInvalidArgument,
               [] { HypergraphColouring(4, 2, 2, std::vector<Colour>(6, 2)); });
}

TEST(Polarized, ConstantGrid) {
  GridColouring g(4, 6, 2, std::vector<Colour>(24, 1));
  auto rect = polarized_homogeneous(g, 2, 3);
  ASSERT_TRUE(rect.has_value());
  EXPECT_EQ(rect->rows, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rect->cols, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Polarized, RowParity) {
  std::vector<Colour> table;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j) table.push_back(i % 2);
  GridColouring g(6, 5, 2, table);
  auto rect = polarized_homogeneous(g, 3, 5);
  ASSERT_TRUE(rect.has_value());
  for (auto i : rect->rows) EXPECT_EQ(i % 2, rect->rows[0] % 2);
  EXPECT_EQ(rect->cols.size(), 5u);
}

TEST(Polarized, RandomGridAgainstOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Colour> table(6 * 64);
    for (auto& c : table) c = rng() & 1;
    GridColouring g(6, 64, 2, table);
    auto rect = polarized_homogeneous(g, 3, 4);
    EXPECT_EQ(rect.has_value(), rectangle_exists(g, 3, 4));
    if (rect)
      for (auto i : rect->rows)
        for (auto j : rect->cols) EXPECT_EQ(g(i, j), rect->colour);
  }
}

TEST(Polarized, SmallGridsAgainstOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 8;
    std::vector<Colour> table(rows * cols);
    for (auto& c : table) c = rng() & 1;
    GridColouring g(rows, cols, 2, table);
    for (std::size_t a = 1; a <= rows; ++a)
      for (std::size_t b = 1; b <= cols; ++b)
        ASSERT_EQ(polarized_homogeneous(g, a, b).has_value(), rectangle_exists(g, a, b));
  }
}

TEST(Polarized, OversizedTargets) {
  GridColouring g(2, 2, 2, std::vector<Colour>(4, 0));
  EXPECT_EQ(polarized_homogeneous(g, 3, 1), std::nullopt);
}

TEST(Pigeonhole, Examples) {
  std::vector<Colour> v{0, 1, 0};
  EXPECT_EQ(pigeonhole_pair(v), (std::pair<std::size_t, std::size_t>{0, 2}));
  std::vector<Colour> distinct{0, 1};
  expect_error(ErrorKind::kNoCollision, [&] { pigeonhole_pair(distinct); });
}

TEST(Pigeonhole, RPlusOneValuesOverRColours) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5;
    std::vector<Colour> v(r + 1);
    for (auto& c : v) c = static_cast<Colour>(rng() % r);
    auto [l, k] = pigeonhole_pair(v);
    EXPECT_LT(l, k);
    EXPECT_EQ(v[l], v[k]);
  }
}

}  // namespace
}  // namespace sumset
