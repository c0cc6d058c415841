#include <gtest/gtest.h>

#include "sumset/extraction.hpp"
#include "sumset/family.hpp"
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

// The blocks a successful pipeline run used; they are known to thin.
struct Prepared {
  std::shared_ptr<const EmbeddedWorld> world;
  BlockFamily blocks;
  ThinnedFamily uniform;
};

const Prepared& prepared(std::size_t r) {
  static std::map<std::size_t, Prepared> cache;
  auto it = cache.find(r);
  if (it == cache.end()) {
    auto world = testing::pipeline_world(r);
    WorldColourings wc{r, static_cast<Colour>(r), world, generate_type_maps(r, r, 1)};
    auto cert = run_pipeline(wc, 5);
    it = cache.emplace(r, Prepared{world, cert.pipeline->blocks, cert.pipeline->family}).first;
  }
  return it->second;
}

TEST(SelectBlocks, CompleteTreeThreeBlocks) {
  auto w = complete_world(6);
  auto bf = select_blocks(w, 3, 4);
  EXPECT_EQ(block_family_violation(w, bf), std::nullopt);
  ASSERT_EQ(bf.r(), 3u);
  for (const auto& b : bf.blocks) EXPECT_GE(b.size(), 4u);
  EXPECT_EQ(bf.nu, (std::vector<Level>{0, 1}));
}

TEST(SelectBlocks, SingleBlock) {
  auto w = complete_world(3);
  auto bf = select_blocks(w, 1, 5);
  ASSERT_EQ(bf.r(), 1u);
  EXPECT_TRUE(bf.nu.empty());
  EXPECT_GE(bf.blocks[0].size(), 5u);
  EXPECT_EQ(block_family_violation(w, bf), std::nullopt);
}

TEST(SelectBlocks, TwoLeavesCannotHoldThreeBlocks) {
  EmbeddedWorld w(2, {{0, BitSeq::from_string("00")}, {1, BitSeq::from_string("11")}});
  try {
    select_blocks(w, 3, 1);
    ADD_FAILURE() << "expected insufficient-world";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInsufficientWorld);
    EXPECT_NE(std::string(e.what()).find("largest achievable block size"), std::string::npos);
  }
}

TEST(SelectBlocks, GeneratedWorlds) {
  for (std::size_t r = 2; r <= 3; ++r) {
    auto w = testing::pipeline_world(r);
    auto bf = select_blocks(*w, r, 16);
    EXPECT_EQ(block_family_violation(*w, bf), std::nullopt);
  }
}

TEST(BlockFamilyViolation, DetectsBrokenFamilies) {
  auto w = complete_world(6);
  auto bf = select_blocks(w, 3, 4);
  auto swapped = bf;
  std::swap(swapped.blocks[0], swapped.blocks[1]);
  EXPECT_NE(block_family_violation(w, swapped), std::nullopt);
  auto wrong_nu = bf;
  wrong_nu.nu = {0, 2};
  EXPECT_NE(block_family_violation(w, wrong_nu), std::nullopt);
}

TEST(ThinBlocks, SatisfiesInvariants) {
  for (std::size_t r = 2; r <= 3; ++r) {
    const auto& p = prepared(r);
    auto tf = thin_blocks(*p.world, p.blocks, 5);
    EXPECT_EQ(thinned_family_violation(*p.world, tf), std::nullopt);
    EXPECT_EQ(tf.m, 5u);
    EXPECT_FALSE(tf.e_frak.has_value());
    // Interleaving, asserted directly as well.
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t k = l + 1; k < r; ++k)
        for (std::size_t i = 0; i + 1 < tf.m; ++i) {
          EXPECT_LT(tf.delta_at(l, i), tf.delta_at(k, i));
          EXPECT_LT(tf.delta_at(k, i), tf.delta_at(l, i + 1));
        }
  }
}

TEST(ThinBlocks, ConvergenceToTheLimit) {
  const auto& p = prepared(3);
  auto tf = thin_blocks(*p.world, p.blocks, 5);
  for (std::size_t l = 0; l < tf.r(); ++l)
    for (std::size_t i = 0; i < tf.m; ++i)
      for (std::size_t j = i + 1; j <= tf.m; ++j)
        EXPECT_EQ(p.world->delta_f(tf.alpha(l, i), tf.alpha(l, j)), tf.delta_at(l, i));
}

TEST(ThinBlocks, UBitsDoNotDependOnTheWitness) {
  const auto& p = prepared(3);
  auto tf = thin_blocks(*p.world, p.blocks, 5);
  for (std::size_t l = 0; l < tf.r(); ++l)
    for (std::size_t k = l + 1; k < tf.r(); ++k)
      for (std::size_t i = 0; i < tf.m; ++i)
        for (Coord alpha : tf.sequences[k])
          EXPECT_EQ(p.world->image(alpha).bit(tf.delta_at(l, i)), tf.u_at(l, k) != 0);
}

TEST(ThinBlocks, SingleBlockAndZeroLength) {
  auto w = testing::pipeline_world(2);
  auto bf = select_blocks(*w, 1, 8);
  auto tf = thin_blocks(*w, bf, 4);
  EXPECT_EQ(tf.r(), 1u);
  EXPECT_EQ(tf.sequences[0].size(), 5u);
  EXPECT_TRUE(tf.u[0].empty());
  EXPECT_EQ(thinned_family_violation(*w, tf), std::nullopt);

  const auto& p = prepared(2);
  expect_error(ErrorKind::kInvalidArgument, [&] { thin_blocks(*p.world, p.blocks, 0); });
}

TEST(ThinBlocks, ExhaustedBlockIsAStagedFailure) {
  const auto& p = prepared(2);
  try {
    thin_blocks(*p.world, p.blocks, 200);
    ADD_FAILURE() << "expected thinning failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kThinningFailure);
    EXPECT_NE(std::string(e.what()).find("block"), std::string::npos) << e.what();
  }
}

TEST(ThinnedFamilyViolation, DetectsTampering) {
  const auto& p = prepared(2);
  auto tf = p.uniform;
  ASSERT_EQ(thinned_family_violation(*p.world, tf), std::nullopt);
  auto bad_delta = tf;
  bad_delta.deltas[0][1] += 1;
  EXPECT_NE(thinned_family_violation(*p.world, bad_delta), std::nullopt);
  auto bad_u = tf;
  bad_u.u[0][0] ^= 1;
  EXPECT_NE(thinned_family_violation(*p.world, bad_u), std::nullopt);
}

// A hand-built depth-6 family with m = 1 and two blocks.
struct HandFamily {
  EmbeddedWorld world;
  ThinnedFamily tf;
};

HandFamily hand_family() {
  std::map<Coord, BitSeq> embed{{0, BitSeq::from_string("000100")},
                                {1, BitSeq::from_string("001000")},
                                {2, BitSeq::from_string("100010")},
                                {3, BitSeq::from_string("100100")}};
  HandFamily h{EmbeddedWorld(6, std::move(embed)), {}};
  h.tf.m = 1;
  h.tf.sequences = {{0, 1}, {2, 3}};
  h.tf.deltas = {{2}, {3}};
  h.tf.u = {{0}, {}};
  h.tf.nu = {0};
  return h;
}

TEST(ComputeEv, HandBuiltFamily) {
  auto h = hand_family();
  EXPECT_EQ(thinned_family_violation(h.world, h.tf), std::nullopt);
  std::vector<std::size_t> i{0, 0};
  EXPECT_EQ(compute_ev(h.world, h.tf, i, 1), (std::vector<std::uint8_t>{1, 0}));
}

TEST(ComputeEv, EmptyCases) {
  auto h = hand_family();
  std::vector<std::size_t> i{0, 0};
  EXPECT_TRUE(compute_ev(h.world, h.tf, i, 0).empty());
  std::vector<std::size_t> at_limit{0, 1};
  EXPECT_TRUE(compute_ev(h.world, h.tf, at_limit, 1).empty());
}

TEST(Candidates, ZeroCandidatesAreCanonicalAndSimilar) {
  const auto& p = prepared(3);
  auto tf = thin_blocks(*p.world, p.blocks, 4);
  auto zero = canonical_candidates(tf, 0);
  ASSERT_FALSE(zero.empty());
  auto first = candidate_tuple(tf, zero.front());
  for (const auto& sel : zero) {
    EXPECT_TRUE(is_canonical_candidate(tf, sel));
    EXPECT_TRUE(f_similar(*p.world, first, candidate_tuple(tf, sel)));
  }
}

TEST(Candidates, DistinguishedFamilyIsCanonical) {
  const auto& p = prepared(3);
  const auto& tf = p.uniform;
  for (std::size_t level = 0; level <= tf.r(); ++level)
    for (std::size_t k = level; k <= tf.r(); ++k)
      for (std::size_t i = 0; i < tf.m; ++i) {
        auto sel = distinguished_candidate(tf, level, k, i);
        EXPECT_TRUE(is_canonical_candidate(tf, sel)) << level << " " << k << " " << i;
        auto tuple = candidate_tuple(tf, sel);
        EXPECT_EQ(tuple.size(), tf.r() + level);
        EXPECT_TRUE(std::is_sorted(tuple.begin(), tuple.end()));
      }
}

TEST(Candidates, ConditionTwoViolation) {
  const auto& p = prepared(2);
  auto tf = thin_blocks(*p.world, p.blocks, 5);
  CandidateSelection sel{2, {0, 2}, {1, 3}};
  EXPECT_FALSE(is_canonical_candidate(tf, sel));
  CandidateSelection fine{2, {0, 2}, {5, 3}};
  EXPECT_TRUE(is_canonical_candidate(tf, fine));
}

TEST(Candidates, MalformedSelections) {
  const auto& p = prepared(2);
  const auto& tf = p.uniform;
  expect_error(ErrorKind::kInvalidArgument,
               [&] { is_canonical_candidate(tf, CandidateSelection{1, {0}, {1}}); });
  expect_error(ErrorKind::kInvalidArgument,
               [&] { is_canonical_candidate(tf, CandidateSelection{1, {0, 1}, {}}); });
  EXPECT_FALSE(is_canonical_candidate(tf, CandidateSelection{1, {2, 1}, {3}}));
  EXPECT_FALSE(is_canonical_candidate(tf, CandidateSelection{1, {2, 3}, {2}}));
}

TEST(Candidates, JIndependenceBeforeUniformizing) {
  for (std::size_t r = 2; r <= 3; ++r) {
    const auto& p = prepared(r);
    for (std::size_t m = 2; m <= 5; ++m) {
      auto tf = thin_blocks(*p.world, p.blocks, m);
      EXPECT_EQ(candidate_uniformity_violation(*p.world, tf), std::nullopt) << r << " " << m;
    }
  }
}

TEST(Uniformize, FullUniformityAfterwards) {
  for (std::size_t r = 2; r <= 3; ++r) {
    const auto& p = prepared(r);
    ASSERT_TRUE(p.uniform.e_frak.has_value());
    EXPECT_EQ(thinned_family_violation(*p.world, p.uniform), std::nullopt);
    EXPECT_EQ(candidate_uniformity_violation(*p.world, p.uniform), std::nullopt);
    for (std::size_t level = 0; level <= r; ++level) {
      auto all = canonical_candidates(p.uniform, level);
      auto first = candidate_tuple(p.uniform, all.front());
      for (const auto& sel : all)
        ASSERT_TRUE(f_similar(*p.world, first, candidate_tuple(p.uniform, sel)));
    }
  }
}

TEST(Uniformize, EvIsConstantOnTheChosenSet) {
  const auto& p = prepared(2);
  auto tf = thin_blocks(*p.world, p.blocks, 12);
  auto u = uniformize_ev(*p.world, tf, 4);
  EXPECT_EQ(u.m, 4u);
  ASSERT_TRUE(u.e_frak.has_value());
  for (std::size_t i0 = 0; i0 < u.m; ++i0)
    for (std::size_t i1 = i0; i1 < u.m; ++i1) {
      std::vector<std::size_t> i{i0, i1};
      EXPECT_EQ(compute_ev(*p.world, u, i, 1), (*u.e_frak)[1]);
    }
}

TEST(Uniformize, SingleBlockKeepsTheFirstIndices) {
  auto w = testing::pipeline_world(2);
  auto bf = select_blocks(*w, 1, 8);
  auto tf = thin_blocks(*w, bf, 6);
  auto u = uniformize_ev(*w, tf, 3);
  EXPECT_EQ(u.sequences[0], (std::vector<Coord>{tf.alpha(0, 0), tf.alpha(0, 1), tf.alpha(0, 2),
                                                tf.limit(0)}));
}

TEST(Uniformize, TooShortFails) {
  const auto& p = prepared(3);
  auto tf = thin_blocks(*p.world, p.blocks, 3);
  expect_error(ErrorKind::kUniformization, [&] { uniformize_ev(*p.world, tf, 4); });
}

}  // namespace
}  // namespace sumset
