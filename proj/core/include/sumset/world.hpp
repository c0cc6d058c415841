#pragma once

// Embedded worlds (W, F), colourings canonical with respect to F, and the
// F-similarity of index tuples.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumset/cantor.hpp"
#include "sumset/group.hpp"

namespace sumset {

/// An ordered finite index set W with an injective embedding F into
/// depth-D words.
class EmbeddedWorld {
 public:
  EmbeddedWorld() = default;
  /// Throws kDepth for a word of the wrong depth and kInvalidArgument if the
  /// embedding is not injective.
  EmbeddedWorld(std::size_t depth, std::map<Coord, BitSeq> embed);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const std::vector<Coord>& indices() const noexcept { return indices_; }
  bool contains(Coord index) const noexcept;
  /// F(index); throws kDomain outside the world.
  const BitSeq& image(Coord index) const;
  TupleOfSeqs image_of(std::span<const Coord> tuple) const;
  /// Δ_F(a, b) = Δ(F(a), F(b)).
  Level delta_f(Coord a, Coord b) const { return delta(image(a), image(b)); }

  /// The sub-world on `subset` (must lie inside this world).
  EmbeddedWorld restricted(std::span<const Coord> subset) const;

  friend bool operator==(const EmbeddedWorld&, const EmbeddedWorld&) = default;

 private:
  std::size_t depth_ = 0;
  std::vector<Coord> indices_;
  std::vector<BitSeq> images_;
};

/// A colour assignment to similarity types. Table maps are authoritative and
/// may be incomplete; constant and hash maps are total, with the table acting
/// as a list of overrides.
struct TypeMap {
  enum class Kind { kTable, kConstant, kHash };

  Kind kind = Kind::kTable;
  Colour colour_count = 1;
  Colour constant = 0;
  std::uint64_t seed = 0;
  std::map<SimilarityType, Colour> table;

  static TypeMap constant_map(Colour colour_count, Colour colour);
  static TypeMap hashed(Colour colour_count, std::uint64_t seed);

  /// Throws kIncompleteMap naming the type when a table map lacks it.
  Colour colour_of(const SimilarityType& type) const;

  friend bool operator==(const TypeMap&, const TypeMap&) = default;
};

/// A k-ary set colouring given through the similarity types of F-images.
struct CanonicalColouring {
  std::size_t k = 0;
  TypeMap type_map;
  std::shared_ptr<const EmbeddedWorld> world;
};

/// F-similarity of two increasing index tuples of the world.
bool f_similar(const EmbeddedWorld& w, std::span<const Coord> a, std::span<const Coord> b);

struct CanonicityResult {
  bool canonical = true;
  std::uint64_t tuples_checked = 0;
  /// Two F-similar tuples with different colours.
  std::optional<std::pair<std::vector<Coord>, std::vector<Coord>>> witness;
};

/// Exhaustive over all increasing k-tuples of the world. Throws kResource
/// when the number of tuples exceeds `max_tuples`.
CanonicityResult is_f_canonical(const SetColouring& d, const EmbeddedWorld& w,
                                std::uint64_t max_tuples = 50'000'000);

/// d(ᾱ) = type_map(similarity_type(F(ᾱ))). Table maps are checked for
/// totality over the world's k-tuples when that enumeration is small.
SetColouring induce_from_types(const CanonicalColouring& cc);

/// Calls `visit` on every increasing k-subset of `items` (as a span of
/// chosen items), in lexicographic order; stops early when it returns false.
template <typename T, typename Visit>
bool for_each_subset(std::span<const T> items, std::size_t k, Visit&& visit) {
  const std::size_t n = items.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    if (!visit(std::span<const T>(chosen))) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sumset
