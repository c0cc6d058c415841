#pragma once

// Finite-support elements of the direct sum of copies of ℕ, patterns stamped
// onto coordinate tuples, and colourings of elements and of tuples.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace sumset {

using Coord = std::uint32_t;
using Value = std::uint64_t;
using Colour = std::uint32_t;

/// An element of ⊕ℕ: a finite map from coordinates to positive values.
/// Zero entries are never stored, so the key set is the support.
class GroupElement {
 public:
  GroupElement() = default;
  /// Zero-valued entries are dropped.
  explicit GroupElement(std::map<Coord, Value> entries);

  const std::map<Coord, Value>& entries() const noexcept { return entries_; }
  Value at(Coord coord) const noexcept;
  std::vector<Coord> support() const;
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::map<Coord, Value> entries_;
};

using ElementSet = std::set<GroupElement>;

/// A finite sequence of positive values.
class Pattern {
 public:
  Pattern() = default;
  /// Throws kInvalidArgument if any value is zero.
  explicit Pattern(std::vector<Value> values);

  const std::vector<Value>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Value> values_;
};

/// A colouring c of group elements into {0, …, r−1}. Either rule-backed (total,
/// evaluated lazily) or table-backed with an explicit finite carrier.
class PointColouring {
 public:
  using Rule = std::function<Colour(const GroupElement&)>;

  PointColouring(Colour colour_count, Rule rule);
  static PointColouring from_table(Colour colour_count,
                                   std::map<GroupElement, Colour> table);

  /// Throws kDomain outside a table carrier and kInternal for a colour ≥ r.
  Colour operator()(const GroupElement& x) const;
  Colour colour_count() const noexcept { return colour_count_; }

 private:
  Colour colour_count_;
  Rule rule_;
};

/// A colouring d of strictly increasing k-tuples of coordinates.
class SetColouring {
 public:
  using Rule = std::function<Colour(std::span<const Coord>)>;

  SetColouring(std::size_t arity, Rule rule,
               std::optional<std::vector<Coord>> index_set = std::nullopt);

  /// Validates arity, strict increase and membership in the index set.
  Colour operator()(std::span<const Coord> tuple) const;
  std::size_t arity() const noexcept { return arity_; }
  const std::optional<std::vector<Coord>>& index_set() const noexcept {
    return index_set_;
  }

 private:
  std::size_t arity_;
  Rule rule_;
  std::optional<std::vector<Coord>> index_set_;
};

/// s_l: 2l twos followed by (r−l) fours.
Pattern make_pattern(std::size_t r, std::size_t l);

/// s*a: the element supported on a with value s(i) at a(i).
GroupElement apply_pattern(const Pattern& s, std::span<const Coord> a);

/// c_s(a) = c(s*a).
SetColouring induced_colouring(PointColouring c, Pattern s);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement doubled(const GroupElement& x);

/// X+X with the diagonal included.
ElementSet sumset(const ElementSet& xs);

struct MonochromeResult {
  bool constant = true;
  std::optional<Colour> colour;  // unset for the empty set
  std::optional<std::pair<GroupElement, GroupElement>> witnesses;
};

MonochromeResult is_monochromatic(const PointColouring& c, const ElementSet& s);

/// Reads the values of x along its support in increasing coordinate order.
std::vector<Value> values_along_support(const GroupElement& x);

}  // namespace sumset
