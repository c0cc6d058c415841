#pragma once

// Seeded generators for embedded worlds and for families of type maps.

#include <cstdint>
#include <vector>

#include "sumset/world.hpp"

namespace sumset {

struct WorldGenOptions {
  enum class Mode { kComplete, kRandom, kComb };

  Mode mode = Mode::kComb;
  /// Number of words in random mode; ignored for complete trees.
  std::size_t size = 512;
  std::size_t depth = 512;
  std::uint64_t seed = 1;
  /// Expected share of a branching node's elements sent to its 0-child.
  double left_share = 0.1;
  /// Comb mode: number of subtrees hanging off the top spine.
  std::size_t teeth = 2;
  /// Splits within this many branchings of the root are balanced instead.
  std::size_t balanced_top = 0;
  /// Success probability of the geometric gap between branching levels.
  double gap_p = 0.5;
  /// Probability that a non-branching bit is 1.
  double noise = 1.0 / 64.0;
};

/// Complete mode: all 2^depth words (depth ≤ 20). Random mode: a recursive
/// split tree with geometric gaps between branching levels and noisy bits
/// elsewhere. Comb mode: `teeth` equal subtrees off a spine at levels
/// 0..teeth−2, where subtree s only branches at levels ≡ s (mod teeth).
/// Indices follow the lexicographic order of the images, so F is order
/// preserving. Throws kInvalidArgument when the tree does not fit.
EmbeddedWorld generate_world(const WorldGenOptions& options);

/// One hashed map into `colours` colours per arity r+ℓ, ℓ = 0..r.
std::vector<TypeMap> generate_type_maps(std::size_t r, Colour colours, std::uint64_t seed);

}  // namespace sumset
