#include <gtest/gtest.h>

#include "sumset/adversary.hpp"
#include "test_support.hpp"

namespace sumset {
namespace {

using testing::expect_error;

// Brute force over all r^n colourings with verify_bad.
bool any_bad_colouring(const AdditiveStructure& s, std::size_t r, std::size_t m) {
  const std::size_t n = s.size();
  std::vector<Colour> colouring(n, 0);
  while (true) {
    if (verify_bad(s, colouring, m).bad) return true;
    std::size_t pos = 0;
    while (pos < n && colouring[pos] + 1 == r) colouring[pos++] = 0;
    if (pos == n) return false;
    ++colouring[pos];
  }
}

TEST(Structure, ParseAndName) {
  EXPECT_EQ(AdditiveStructure::parse("interval:7"), AdditiveStructure::interval(7));
  EXPECT_EQ(AdditiveStructure::parse("cyclic:5").size(), 5u);
  auto sum = AdditiveStructure::parse("sum:2:3");
  EXPECT_EQ(sum.size(), 16u);
  EXPECT_EQ(sum.name(), "sum:2:3");
  EXPECT_EQ(sum.label(1 + 4 * 2), "(1,2)");
  expect_error(ErrorKind::kParse, [] { AdditiveStructure::parse("interval"); });
  expect_error(ErrorKind::kParse, [] { AdditiveStructure::parse("torus:3"); });
  expect_error(ErrorKind::kParse, [] { AdditiveStructure::parse("cyclic:-2"); });
}

TEST(Structure, PartialAddition) {
  auto interval = AdditiveStructure::interval(4);
  EXPECT_EQ(interval.size(), 5u);
  EXPECT_EQ(interval.add(1, 3), std::optional<std::size_t>(4));
  EXPECT_EQ(interval.add(2, 3), std::nullopt);
  EXPECT_EQ(AdditiveStructure::cyclic(5).add(3, 4), std::optional<std::size_t>(2));
  auto sum = AdditiveStructure::truncated_sum(2, 2);
  EXPECT_EQ(sum.add(1, 3), std::optional<std::size_t>(4));
  EXPECT_EQ(sum.add(2, 1), std::nullopt);
}

TEST(Structure, AdditionLaws) {
  for (const auto& s : {AdditiveStructure::interval(6), AdditiveStructure::cyclic(6),
                        AdditiveStructure::truncated_sum(2, 2)})
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        EXPECT_EQ(s.add(a, b), s.add(b, a));
        for (std::size_t c = 0; c < s.size(); ++c) {
          auto ab = s.add(a, b), bc = s.add(b, c);
          if (ab && bc) EXPECT_EQ(s.add(*ab, c), s.add(a, *bc));
        }
      }
}

TEST(VerifyBad, TrivialCases) {
  auto s = AdditiveStructure::cyclic(4);
  std::vector<Colour> rainbow{0, 1, 2, 3};
  EXPECT_TRUE(verify_bad(s, rainbow, 5).bad);
  auto single = verify_bad(s, rainbow, 1);
  EXPECT_FALSE(single.bad);
  ASSERT_TRUE(single.witness.has_value());
  EXPECT_EQ(single.witness->size(), 1u);
}

TEST(VerifyBad, IntervalPairsAgainstEnumeration) {
  auto s = AdditiveStructure::interval(7);
  std::vector<Colour> colouring{0, 1, 1, 0, 1, 0, 0, 1};
  bool bad = true;
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = x + 1; y < 8; ++y) {
      if (2 * y > 7) continue;
      Colour c = colouring[2 * x];
      if (colouring[x + y] == c && colouring[2 * y] == c) bad = false;
    }
  auto check = verify_bad(s, colouring, 2);
  EXPECT_EQ(check.bad, bad);
  if (check.witness) {
    auto [x, y] = std::pair{(*check.witness)[0], (*check.witness)[1]};
    EXPECT_EQ(colouring[2 * x], colouring[x + y]);
    EXPECT_EQ(colouring[2 * x], colouring[2 * y]);
  }
}

TEST(FindBad, RainbowOnZ5) {
  auto s = AdditiveStructure::cyclic(5);
  std::vector<Colour> rainbow{0, 1, 2, 3, 4};
  EXPECT_TRUE(verify_bad(s, rainbow, 2).bad);
  auto report = find_bad_colouring(s, 5, 2);
  EXPECT_EQ(report.outcome, SearchReport::Outcome::kFound);
  ASSERT_TRUE(report.colouring.has_value());
  EXPECT_TRUE(verify_bad(s, *report.colouring, 2).bad);
}

TEST(FindBad, OneColourNeverSucceeds) {
  for (const auto& s : {AdditiveStructure::interval(6), AdditiveStructure::cyclic(5)}) {
    auto report = find_bad_colouring(s, 1, 2);
    EXPECT_EQ(report.outcome, SearchReport::Outcome::kNoneExists);
  }
}

TEST(FindBad, MatchesFullExhaustionOnIntervals) {
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t m = 2; m <= 3; ++m) {
      auto s = AdditiveStructure::interval(n);
      auto report = find_bad_colouring(s, 2, m);
      ASSERT_NE(report.outcome, SearchReport::Outcome::kBudgetExhausted);
      EXPECT_EQ(report.outcome == SearchReport::Outcome::kFound, any_bad_colouring(s, 2, m))
          << "n=" << n << " m=" << m;
    }
}

TEST(FindBad, MatchesFullExhaustionOnSmallStructures) {
  for (const auto& s : {AdditiveStructure::cyclic(3), AdditiveStructure::cyclic(4),
                        AdditiveStructure::cyclic(6), AdditiveStructure::truncated_sum(2, 1)})
    for (std::size_t r = 1; r <= 3; ++r) {
      auto report = find_bad_colouring(s, r, 2);
      EXPECT_EQ(report.outcome == SearchReport::Outcome::kFound, any_bad_colouring(s, r, 2))
          << s.name() << " r=" << r;
    }
}

TEST(FindBad, Monotonicity) {
  for (const auto& s : {AdditiveStructure::interval(8), AdditiveStructure::cyclic(5),
                        AdditiveStructure::cyclic(7)})
    for (std::size_t r = 1; r <= 3; ++r) {
      auto report = find_bad_colouring(s, r, 2);
      if (report.outcome != SearchReport::Outcome::kFound) continue;
      // The same colouring stays bad with an extra unused colour and for m+1.
      EXPECT_TRUE(verify_bad(s, *report.colouring, 3).bad);
      EXPECT_EQ(find_bad_colouring(s, r + 1, 2).outcome, SearchReport::Outcome::kFound);
      EXPECT_EQ(find_bad_colouring(s, r, 3).outcome, SearchReport::Outcome::kFound);
    }
}

TEST(FindBad, BudgetExhaustion) {
  auto report = find_bad_colouring(AdditiveStructure::interval(8), 2, 2, SearchBudget{0, 0});
  EXPECT_EQ(report.outcome, SearchReport::Outcome::kBudgetExhausted);
  EXPECT_FALSE(report.colouring.has_value());
}

TEST(FindBad, DeterministicAcrossJobCounts) {
  for (const auto& s : {AdditiveStructure::interval(12), AdditiveStructure::cyclic(9)})
    for (std::uint64_t budget : {std::uint64_t{50}, std::uint64_t{10'000'000}}) {
      auto one = find_bad_colouring(s, 2, 2, {budget, 0}, 1);
      for (std::size_t jobs : {2, 3}) EXPECT_EQ(find_bad_colouring(s, 2, 2, {budget, 0}, jobs), one);
    }
}

TEST(FindBad, RecordsSymmetryAndRejectsBadArguments) {
  auto report = find_bad_colouring(AdditiveStructure::cyclic(4), 2, 2);
  EXPECT_FALSE(report.symmetry.empty());
  expect_error(ErrorKind::kInvalidArgument,
               [] { find_bad_colouring(AdditiveStructure::cyclic(4), 2, 1); });
  expect_error(ErrorKind::kInvalidArgument,
               [] { find_bad_colouring(AdditiveStructure::cyclic(4), 0, 2); });
}

TEST(EstimateR, DegenerateWitnessSize) {
  expect_error(ErrorKind::kInvalidArgument,
               [] { estimate_r(AdditiveStructure::cyclic(3), 1, 3); });
}

TEST(EstimateR, SingleAdmissibleSet) {
  // {0,1,2}: only X = {0,1} has X+X inside the carrier.
  auto s = AdditiveStructure::interval(2);
  auto report = estimate_r(s, 2, 3);
  EXPECT_EQ(report.minimal_r, std::optional<std::size_t>(2));
  EXPECT_TRUE(report.conclusive);
}

TEST(EstimateR, CyclicThree) {
  auto report = estimate_r(AdditiveStructure::cyclic(3), 2, 4);
  EXPECT_EQ(report.minimal_r, std::optional<std::size_t>(2));
  EXPECT_TRUE(report.conclusive);
  EXPECT_TRUE(any_bad_colouring(AdditiveStructure::cyclic(3), 2, 2));
  EXPECT_FALSE(any_bad_colouring(AdditiveStructure::cyclic(3), 1, 2));
}

TEST(EstimateR, BudgetMakesItInconclusive) {
  auto report = estimate_r(AdditiveStructure::interval(10), 2, 2, SearchBudget{0, 0});
  EXPECT_FALSE(report.minimal_r.has_value());
  EXPECT_FALSE(report.conclusive);
}

}  // namespace
}  // namespace sumset
