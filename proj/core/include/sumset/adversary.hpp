#pragma once

// Small additive structures and the search for colourings with no
// monochromatic sumset X+X of a given witness size m.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

/// A finite carrier with a possibly partial addition. Elements are the
/// indices 0..size−1.
class AdditiveStructure {
 public:
  enum class Kind { kInterval, kCyclic, kTruncatedSum };

  /// {0, …, n} with ordinary addition, defined below n+1.
  static AdditiveStructure interval(std::size_t n);
  /// ℤ_n.
  static AdditiveStructure cyclic(std::size_t n);
  /// {0, …, cap}^dims with coordinatewise addition, defined within the cap.
  static AdditiveStructure truncated_sum(std::size_t dims, std::size_t cap);
  /// Parses "interval:N", "cyclic:N" or "sum:D:CAP".
  static AdditiveStructure parse(const std::string& spec);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t parameter() const noexcept { return n_; }
  std::size_t dims() const noexcept { return dims_; }
  std::string name() const;
  std::string label(std::size_t element) const;
  std::optional<std::size_t> add(std::size_t a, std::size_t b) const;

  friend bool operator==(const AdditiveStructure&, const AdditiveStructure&) = default;

 private:
  AdditiveStructure(Kind kind, std::size_t n, std::size_t dims);

  Kind kind_;
  std::size_t n_;
  std::size_t dims_;
  std::size_t size_;
};

struct BadCheck {
  bool bad = true;
  /// An m-set X with X+X defined and monochromatic.
  std::optional<std::vector<std::size_t>> witness;
};

/// Brute force over all m-subsets; m > size is vacuously bad.
BadCheck verify_bad(const AdditiveStructure& s, const std::vector<Colour>& colouring,
                    std::size_t m);

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  /// 0 disables the wall-clock limit.
  double max_seconds = 0;
};

struct SearchReport {
  enum class Outcome { kFound, kNoneExists, kBudgetExhausted };

  std::string structure;
  std::size_t r = 0;
  std::size_t m = 0;
  Outcome outcome = Outcome::kBudgetExhausted;
  std::optional<std::vector<Colour>> colouring;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t admissible_sets = 0;
  std::string symmetry;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

std::string to_string(SearchReport::Outcome outcome);

/// Backtracking in carrier order; colours are introduced in increasing order
/// (colour-permutation symmetry). Throws kInvalidArgument for m < 2 or r = 0.
SearchReport find_bad_colouring(const AdditiveStructure& s, std::size_t r, std::size_t m,
                                SearchBudget budget = {}, std::size_t jobs = 1);

struct EstimateReport {
  std::string structure;
  std::size_t m = 0;
  std::size_t r_max = 0;
  /// Least r ≤ r_max with a bad colouring, if one was proven.
  std::optional<std::size_t> minimal_r;
  /// True when every r below minimal_r (or all r ≤ r_max) was refuted.
  bool conclusive = false;
  std::vector<SearchReport> levels;

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

EstimateReport estimate_r(const AdditiveStructure& s, std::size_t m, std::size_t r_max,
                          SearchBudget budget = {}, std::size_t jobs = 1);

}  // namespace sumset
