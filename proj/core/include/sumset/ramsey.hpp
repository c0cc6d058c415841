#pragma once

// Bounded homogeneity extractors: finite stand-ins for the Ramsey, polarized
// and pigeonhole partition relations. Every search distinguishes a
// definitive failure (nullopt) from running out of budget (Error kResource).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

struct SearchLimits {
  std::uint64_t max_nodes = 20'000'000;
};

/// Colouring of the increasing r-tuples of {0, …, n−1}, stored densely by
/// colex rank.
class HypergraphColouring {
 public:
  using Rule = std::function<Colour(std::span<const std::size_t>)>;

  HypergraphColouring(std::size_t n, std::size_t r, Colour colours, std::vector<Colour> table);
  static HypergraphColouring from_rule(std::size_t n, std::size_t r, Colour colours,
                                       const Rule& rule);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return r_; }
  Colour colour_count() const noexcept { return colours_; }
  Colour operator()(std::span<const std::size_t> tuple) const;

 private:
  std::size_t n_;
  std::size_t r_;
  Colour colours_;
  std::vector<Colour> table_;
};

/// Colex rank of an increasing tuple: Σ C(a_i, i+1).
std::uint64_t colex_rank(std::span<const std::size_t> tuple);

/// Lexicographically first increasing t-subset I of {0..n−1} with h constant
/// on [I]^r. If `admissible` is given, the constant colour must satisfy it.
std::optional<std::vector<std::size_t>> ramsey_homogeneous(
    const HypergraphColouring& h, std::size_t t, SearchLimits limits = {},
    const std::function<bool(Colour)>& admissible = {});

class GridColouring {
 public:
  GridColouring(std::size_t rows, std::size_t cols, Colour colours, std::vector<Colour> table);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Colour colour_count() const noexcept { return colours_; }
  Colour operator()(std::size_t i, std::size_t j) const { return table_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Colour colours_;
  std::vector<Colour> table_;
};

struct Rectangle {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Colour colour = 0;
  bool from_greedy = false;
};

/// Rows A (|A| = a) and columns B (|B| = b) with g constant on A×B. The greedy
/// majority pass runs first; the exhaustive pass over row subsets is complete.
std::optional<Rectangle> polarized_homogeneous(const GridColouring& g, std::size_t a,
                                               std::size_t b, SearchLimits limits = {});

/// First ℓ < k with values[ℓ] == values[k], scanning k upwards. Throws
/// kNoCollision when all values are distinct.
std::pair<std::size_t, std::size_t> pigeonhole_pair(std::span<const Colour> values);

}  // namespace sumset
