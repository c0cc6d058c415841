#pragma once

// Fixed-depth binary words standing in for points of Cantor space, the
// splitting level Δ, and the similarity relation on tuples of words.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumset {

using Level = std::uint32_t;

/// A binary word of fixed depth. Ordering is lexicographic and only
/// meaningful between words of equal depth.
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::vector<std::uint8_t> bits);
  /// Parses a string of '0'/'1' characters; throws kParse otherwise.
  static BitSeq from_string(std::string_view text);

  std::size_t depth() const noexcept { return bits_.size(); }
  bool bit(std::size_t level) const { return bits_.at(level) != 0; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::string to_string() const;

  /// Appends zeros up to `depth`.
  BitSeq padded(std::size_t depth) const;

  friend auto operator<=>(const BitSeq&, const BitSeq&) = default;
  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Least level where s and t differ. Throws kUndefinedDelta if s == t and
/// kDepth if the depths differ.
Level delta(const BitSeq& s, const BitSeq& t);

/// An ordered tuple of pairwise distinct words of one common depth.
class TupleOfSeqs {
 public:
  TupleOfSeqs() = default;
  explicit TupleOfSeqs(std::vector<BitSeq> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  std::size_t depth() const noexcept { return coords_.empty() ? 0 : coords_[0].depth(); }
  const BitSeq& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BitSeq>& coords() const noexcept { return coords_; }

  friend bool operator==(const TupleOfSeqs&, const TupleOfSeqs&) = default;

 private:
  std::vector<BitSeq> coords_;
};

/// Depth-free canonical invariant of a tuple up to similarity: the distinct
/// splitting levels replaced by their ranks, the rank of Δ for every pair and
/// the bit of every coordinate at every splitting level.
struct SimilarityType {
  std::uint32_t k = 0;
  std::uint32_t levels = 0;
  /// Indexed by pair_index(a, b) for a < b.
  std::vector<std::uint32_t> pair_rank;
  /// bit_matrix[l][j] is the bit of coordinate l at the level of rank j.
  std::vector<std::vector<std::uint8_t>> bit_matrix;

  std::uint32_t rank_of(std::size_t a, std::size_t b) const;
  /// Compact, stable text key; equal keys iff equal types.
  std::string key() const;

  friend auto operator<=>(const SimilarityType&, const SimilarityType&) = default;
  friend bool operator==(const SimilarityType&, const SimilarityType&) = default;
};

/// Position of the unordered pair {a, b} (a < b) among all pairs of k
/// coordinates in lexicographic order.
std::size_t pair_index(std::size_t k, std::size_t a, std::size_t b);

/// Similarity of tuples by direct quantification over all coordinate
/// quadruples. Throws kInvalidArgument on a size mismatch.
bool similar(const TupleOfSeqs& t, const TupleOfSeqs& s);

SimilarityType similarity_type(const TupleOfSeqs& t);

/// All types realized by injective k-tuples of depth-D words.
std::set<SimilarityType> enumerate_types(std::size_t k, std::size_t depth);

/// Like enumerate_types, with the first realizing tuple in enumeration order.
std::map<SimilarityType, TupleOfSeqs> type_representatives(std::size_t k,
                                                           std::size_t depth);

/// Pads every coordinate with zeros; throws kDepth if target < depth.
TupleOfSeqs pad_to_depth(const TupleOfSeqs& t, std::size_t target);

}  // namespace sumset
