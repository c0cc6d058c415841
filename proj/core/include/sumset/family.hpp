#pragma once

// Block families, thinned convergent sequences, canonical candidates and the
// ev-functions that decide their similarity types.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumset/ramsey.hpp"
#include "sumset/world.hpp"

namespace sumset {

/// r blocks hanging off one spine of the binary tree at levels ν_0 < … < ν_{r−2}.
struct BlockFamily {
  std::vector<std::vector<Coord>> blocks;
  std::vector<Level> nu;

  std::size_t r() const noexcept { return blocks.size(); }
  friend bool operator==(const BlockFamily&, const BlockFamily&) = default;
};

/// Returns a description of the first violated BlockFamily invariant.
std::optional<std::string> block_family_violation(const EmbeddedWorld& w, const BlockFamily& bf);

/// For every block l an increasing sequence α^l_0 < … < α^l_m whose last
/// element plays the limit, with splitting levels δ^l_i (i < m), the bits u_l
/// read off later blocks and, once uniformized, the maps 𝔢(k).
struct ThinnedFamily {
  std::size_t m = 0;
  std::vector<std::vector<Coord>> sequences;
  std::vector<std::vector<Level>> deltas;
  /// u[l][k − l − 1] = u_l(k) for l < k < r.
  std::vector<std::vector<std::uint8_t>> u;
  /// e_frak[k] has 2k entries.
  std::optional<std::vector<std::vector<std::uint8_t>>> e_frak;
  std::vector<Level> nu;

  std::size_t r() const noexcept { return sequences.size(); }
  Coord alpha(std::size_t l, std::size_t i) const { return sequences.at(l).at(i); }
  Coord limit(std::size_t l) const { return sequences.at(l).at(m); }
  Level delta_at(std::size_t l, std::size_t i) const { return deltas.at(l).at(i); }
  std::uint8_t u_at(std::size_t l, std::size_t k) const { return u.at(l).at(k - l - 1); }
  std::vector<Coord> union_indices() const;

  friend bool operator==(const ThinnedFamily&, const ThinnedFamily&) = default;
};

/// Returns a description of the first violated ThinnedFamily invariant
/// (including 𝔢 when present).
std::optional<std::string> thinned_family_violation(const EmbeddedWorld& w,
                                                    const ThinnedFamily& tf);

/// Walks the trie of F″W and peels r blocks off a spine. Throws
/// kInsufficientWorld (reporting the largest achievable block size).
BlockFamily select_blocks(const EmbeddedWorld& w, std::size_t r, std::size_t min_block);

struct ThinOptions {
  /// Share of a later block's pool that each polarized shrink first tries
  /// to keep.
  double keep_fraction = 0.5;
  /// The keep fraction is halved until a rectangle exists or the column
  /// count would drop to this.
  std::size_t min_columns = 2;
  SearchLimits limits{2'000};
};

/// Convergent branches per block, stabilized bits u_l(k) via polarized
/// extraction, then a simultaneous shrink to interleave the δ's. Throws
/// kThinningFailure naming the stage, block and sizes.
ThinnedFamily thin_blocks(const EmbeddedWorld& w, const BlockFamily& bf, std::size_t m,
                          const ThinOptions& options = {});

/// An ℓ-candidate: pairs (i_t, j_t) for t < ℓ and singletons i_t for ℓ ≤ t < r.
struct CandidateSelection {
  std::size_t level = 0;
  std::vector<std::size_t> i;
  std::vector<std::size_t> j;

  friend bool operator==(const CandidateSelection&, const CandidateSelection&) = default;
};

/// Throws kInvalidArgument for a malformed selection.
bool is_canonical_candidate(const ThinnedFamily& tf, const CandidateSelection& sel);

/// The increasing index tuple of length r + ℓ.
std::vector<Coord> candidate_tuple(const ThinnedFamily& tf, const CandidateSelection& sel);

/// Every canonical ℓ-candidate, in lexicographic order of (i, j).
std::vector<CandidateSelection> canonical_candidates(const ThinnedFamily& tf, std::size_t level);

/// {α^l_0, α^l_m : l < ℓ} ∪ {α^l_i : ℓ ≤ l < k} ∪ {α^l_m : k ≤ l < r}.
CandidateSelection distinguished_candidate(const ThinnedFamily& tf, std::size_t level,
                                           std::size_t k, std::size_t i);

/// ev(2t) = F(α^t_{i_t})(δ^k_{i_k}), ev(2t+1) = F(α^t_m)(δ^k_{i_k}) for t < k;
/// empty when k = 0 or i_k is the limit index.
std::vector<std::uint8_t> compute_ev(const EmbeddedWorld& w, const ThinnedFamily& tf,
                                     std::span<const std::size_t> i, std::size_t k);

/// Restricts every sequence to I ∪ {m} for an I of size `target` on which
/// ev(·, k) equals one map 𝔢(k) for every non-decreasing index vector.
/// Throws kUniformization when no such I exists, kResource on budget.
ThinnedFamily uniformize_ev(const EmbeddedWorld& w, const ThinnedFamily& tf, std::size_t target,
                            SearchLimits limits = {});

/// Checks, over every canonical candidate of every level, that candidates
/// sharing their i's are F-similar and, when 𝔢 is recorded, that all
/// candidates of one level are. Reports the first failure.
std::optional<std::string> candidate_uniformity_violation(const EmbeddedWorld& w,
                                                          const ThinnedFamily& tf);

}  // namespace sumset
