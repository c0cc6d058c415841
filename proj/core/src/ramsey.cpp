#include "sumset/ramsey.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sumset/error.hpp"
#include "sumset/world.hpp"

namespace sumset {

std::uint64_t colex_rank(std::span<const std::size_t> tuple) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) rank += binomial(tuple[i], i + 1);
  return rank;
}

HypergraphColouring::HypergraphColouring(std::size_t n, std::size_t r, Colour colours,
                                         std::vector<Colour> table)
    : n_(n), r_(r), colours_(colours), table_(std::move(table)) {
  if (r_ == 0) throw Error(ErrorKind::kInvalidArgument, "hypergraph dimension must be >= 1");
  if (table_.size() != binomial(n_, r_))
    throw Error(ErrorKind::kInvalidArgument, "hypergraph table has the wrong size");
  for (Colour c : table_)
    if (c >= colours_) throw Error(ErrorKind::kInvalidArgument, "hypergraph colour out of range");
}

HypergraphColouring HypergraphColouring::from_rule(std::size_t n, std::size_t r, Colour colours,
                                                   const Rule& rule) {
  std::vector<Colour> table(binomial(n, r));
  std::vector<std::size_t> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  for_each_subset<std::size_t>(ground, r, [&](std::span<const std::size_t> tuple) {
    table[colex_rank(tuple)] = rule(tuple);
    return true;
  });
  return HypergraphColouring(n, r, colours, std::move(table));
}

Colour HypergraphColouring::operator()(std::span<const std::size_t> tuple) const {
  if (tuple.size() != r_)
    throw Error(ErrorKind::kInvalidArgument, "hypergraph tuple of the wrong size");
  return table_[colex_rank(tuple)];
}

namespace {

class RamseySearch {
 public:
  RamseySearch(const HypergraphColouring& h, std::size_t t, SearchLimits limits,
               const std::function<bool(Colour)>& admissible)
      : h_(h), t_(t), limits_(limits), admissible_(admissible) {}

  std::optional<std::vector<std::size_t>> run() {
    chosen_.clear();
    if (extend(0, std::nullopt)) return chosen_;
    return std::nullopt;
  }

 private:
  // Checks every r-subset of chosen_ ∪ {v} that contains v.
  bool consistent(std::size_t v, std::optional<Colour>& colour) const {
    const std::size_t r = h_.dimension();
    if (chosen_.size() + 1 < r) return true;
    std::vector<std::size_t> tuple(r);
    bool ok = true;
    for_each_subset<std::size_t>(chosen_, r - 1, [&](std::span<const std::size_t> part) {
      std::copy(part.begin(), part.end(), tuple.begin());
      tuple[r - 1] = v;
      Colour c = h_(tuple);
      if (!colour) {
        if (admissible_ && !admissible_(c)) {
          ok = false;
          return false;
        }
        colour = c;
      } else if (*colour != c) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  }

  bool extend(std::size_t from, std::optional<Colour> colour) {
    if (chosen_.size() == t_) return true;
    const std::size_t n = h_.ground_size();
    for (std::size_t v = from; v + (t_ - chosen_.size()) <= n; ++v) {
      if (++nodes_ > limits_.max_nodes)
        throw Error(ErrorKind::kResource, "ramsey_homogeneous: node budget of " +
                                              std::to_string(limits_.max_nodes) + " exhausted");
      std::optional<Colour> next = colour;
      if (!consistent(v, next)) continue;
      chosen_.push_back(v);
      if (extend(v + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const HypergraphColouring& h_;
  std::size_t t_;
  SearchLimits limits_;
  const std::function<bool(Colour)>& admissible_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

bool is_homogeneous(const HypergraphColouring& h, std::span<const std::size_t> set) {
  std::optional<Colour> colour;
  return for_each_subset<std::size_t>(set, h.dimension(), [&](std::span<const std::size_t> tuple) {
    Colour c = h(tuple);
    if (!colour) colour = c;
    return *colour == c;
  });
}

}  // namespace

std::optional<std::vector<std::size_t>> ramsey_homogeneous(
    const HypergraphColouring& h, std::size_t t, SearchLimits limits,
    const std::function<bool(Colour)>& admissible) {
  const std::size_t n = h.ground_size();
  if (t > n) return std::nullopt;
  std::optional<std::vector<std::size_t>> found;
  if (h.dimension() == 1) {
    // Pigeonhole: the first t members of each colour class, smallest first.
    std::vector<std::vector<std::size_t>> classes(h.colour_count());
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t tuple[1] = {v};
      classes[h(tuple)].push_back(v);
    }
    for (Colour c = 0; c < h.colour_count(); ++c) {
      if (classes[c].size() < t || (admissible && !admissible(c))) continue;
      std::vector<std::size_t> candidate(classes[c].begin(), classes[c].begin() + t);
      if (!found || candidate < *found) found = candidate;
    }
    if (t == 0) found = std::vector<std::size_t>{};
  } else {
    found = RamseySearch(h, t, limits, admissible).run();
  }
  if (found && !is_homogeneous(h, *found))
    throw Error(ErrorKind::kInternal, "ramsey_homogeneous returned a non-homogeneous set");
  return found;
}

GridColouring::GridColouring(std::size_t rows, std::size_t cols, Colour colours,
                             std::vector<Colour> table)
    : rows_(rows), cols_(cols), colours_(colours), table_(std::move(table)) {
  if (table_.size() != rows_ * cols_)
    throw Error(ErrorKind::kInvalidArgument, "grid table has the wrong size");
  for (Colour c : table_)
    if (c >= colours_) throw Error(ErrorKind::kInvalidArgument, "grid colour out of range");
}

namespace {

std::optional<Rectangle> greedy_rectangle(const GridColouring& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> freq(g.colour_count(), 0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) ++freq[g(i, j)];
  std::vector<Colour> order(g.colour_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Colour x, Colour y) { return freq[x] > freq[y]; });

  for (Colour colour : order) {
    std::vector<std::size_t> cols(g.cols());
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < g.rows() && rows.size() < a; ++i) {
      std::vector<std::size_t> kept;
      for (std::size_t j : cols)
        if (g(i, j) == colour) kept.push_back(j);
      if (kept.size() < b) continue;
      rows.push_back(i);
      cols = std::move(kept);
    }
    if (rows.size() == a && cols.size() >= b) {
      cols.resize(b);
      return Rectangle{std::move(rows), std::move(cols), colour, true};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rectangle> polarized_homogeneous(const GridColouring& g, std::size_t a,
                                               std::size_t b, SearchLimits limits) {
  if (a > g.rows() || b > g.cols()) return std::nullopt;
  std::optional<Rectangle> found = greedy_rectangle(g, a, b);
  if (!found) {
    std::vector<std::size_t> all_rows(g.rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    for_each_subset<std::size_t>(all_rows, a, [&](std::span<const std::size_t> rows) {
      for (Colour colour = 0; colour < g.colour_count(); ++colour) {
        if (++nodes > limits.max_nodes) {
          exhausted = true;
          return false;
        }
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < g.cols(); ++j) {
          bool all = true;
          for (std::size_t i : rows)
            if (g(i, j) != colour) {
              all = false;
              break;
            }
          if (all) cols.push_back(j);
        }
        if (cols.size() >= b) {
          cols.resize(b);
          found = Rectangle{std::vector<std::size_t>(rows.begin(), rows.end()), std::move(cols),
                            colour, false};
          return false;
        }
      }
      return true;
    });
    if (exhausted)
      throw Error(ErrorKind::kResource, "polarized_homogeneous: node budget of " +
                                            std::to_string(limits.max_nodes) + " exhausted");
  }
  if (found) {
    for (std::size_t i : found->rows)
      for (std::size_t j : found->cols)
        if (g(i, j) != found->colour)
          throw Error(ErrorKind::kInternal, "polarized_homogeneous: rectangle is not constant");
  }
  return found;
}

std::pair<std::size_t, std::size_t> pigeonhole_pair(std::span<const Colour> values) {
  for (std::size_t k = 1; k < values.size(); ++k)
    for (std::size_t l = 0; l < k; ++l)
      if (values[l] == values[k]) return {l, k};
  throw Error(ErrorKind::kNoCollision, "pigeonhole_pair: all " + std::to_string(values.size()) +
                                           " values are distinct");
}

}  // namespace sumset
