#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sumset/error.hpp"
#include "sumset/family.hpp"
#include "monotone.hpp"
#include "trie.hpp"

namespace sumset {

std::vector<Coord> ThinnedFamily::union_indices() const {
  std::vector<Coord> out;
  for (const auto& seq : sequences) out.insert(out.end(), seq.begin(), seq.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string at_block(std::size_t l) { return " (block " + std::to_string(l) + ")"; }

}  // namespace

std::optional<std::string> thinned_family_violation(const EmbeddedWorld& w,
                                                    const ThinnedFamily& tf) {
  const std::size_t r = tf.r();
  const std::size_t m = tf.m;
  if (r == 0) return "no sequences";
  if (tf.deltas.size() != r || tf.u.size() != r) return "per-block data has the wrong arity";
  if (tf.nu.size() != r - 1) return "expected " + std::to_string(r - 1) + " nu levels";
  for (std::size_t l = 0; l < r; ++l) {
    if (tf.sequences[l].size() != m + 1) return "sequence length is not m+1" + at_block(l);
    if (tf.deltas[l].size() != m) return "expected m deltas" + at_block(l);
    if (tf.u[l].size() != r - 1 - l) return "u has the wrong size" + at_block(l);
    for (Coord a : tf.sequences[l])
      if (!w.contains(a)) return "index " + std::to_string(a) + " is not in the world";
  }

  // F is order preserving on the union, blocks in index order.
  std::vector<Coord> concat;
  for (const auto& seq : tf.sequences) concat.insert(concat.end(), seq.begin(), seq.end());
  for (std::size_t p = 1; p < concat.size(); ++p) {
    if (concat[p - 1] >= concat[p]) return "union is not listed in increasing index order";
    if (!(w.image(concat[p - 1]) < w.image(concat[p]))) return "F is not order preserving";
  }

  for (std::size_t l = 0; l < r; ++l) {
    const auto& seq = tf.sequences[l];
    for (std::size_t i = 0; i < m; ++i) {
      const Level d = tf.deltas[l][i];
      if (i > 0 && tf.deltas[l][i - 1] >= d) return "deltas not increasing" + at_block(l);
      if (r >= 2 && d <= tf.nu[r - 2]) return "delta at or below nu_{r-2}" + at_block(l);
      for (std::size_t j = i + 1; j <= m; ++j)
        if (w.delta_f(seq[i], seq[j]) != d)
          return "Delta(alpha_" + std::to_string(i) + ", alpha_" + std::to_string(j) +
                 ") != delta_" + std::to_string(i) + at_block(l);
      if (w.image(seq[i]).bit(d) != 0 || w.image(seq[m]).bit(d) != 1)
        return "limit shadow fails at delta_" + std::to_string(i) + at_block(l);
    }
    for (std::size_t k = l + 1; k < r; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        if (!(tf.deltas[l][i] < tf.deltas[k][i]))
          return "interleaving delta^l_i < delta^k_i fails for l=" + std::to_string(l) +
                 ", k=" + std::to_string(k) + ", i=" + std::to_string(i);
        if (i + 1 < m && !(tf.deltas[k][i] < tf.deltas[l][i + 1]))
          return "interleaving delta^k_i < delta^l_{i+1} fails for l=" + std::to_string(l) +
                 ", k=" + std::to_string(k) + ", i=" + std::to_string(i);
      }
      for (Coord a : tf.sequences[k])
        for (std::size_t i = 0; i < m; ++i)
          if (w.image(a).bit(tf.deltas[l][i]) != tf.u_at(l, k))
            return "u_" + std::to_string(l) + "(" + std::to_string(k) + ") fails at index " +
                   std::to_string(a);
      for (Coord a : tf.sequences[l])
        for (Coord b : tf.sequences[k])
          if (w.delta_f(a, b) != tf.nu[l])
            return "blocks " + std::to_string(l) + "," + std::to_string(k) +
                   " do not split at nu_" + std::to_string(l);
    }
    if (r >= 2)
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
          if (w.delta_f(seq[i], seq[j]) <= tf.nu[r - 2])
            return "block splits at or below nu_{r-2}" + at_block(l);
  }

  if (tf.e_frak) {
    const auto& e = *tf.e_frak;
    if (e.size() != r) return "e_frak needs one map per block";
    for (std::size_t k = 0; k < r; ++k)
      if (e[k].size() != 2 * k) return "e_frak(" + std::to_string(k) + ") has the wrong size";
    std::optional<std::string> bad;
    detail::for_each_monotone(r, m, [&](std::span<const std::size_t> i) {
      for (std::size_t k = 1; k < r; ++k)
        if (compute_ev(w, tf, i, k) != e[k]) {
          bad = "ev(i, " + std::to_string(k) + ") differs from e_frak(" + std::to_string(k) + ")";
          return false;
        }
      return true;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(const std::string& stage, std::size_t block, const std::string& detail) {
  throw Error(ErrorKind::kThinningFailure,
              "thin_blocks: stage " + stage + " failed" + at_block(block) + ": " + detail);
}

struct Row {
  Level delta;
  Coord alpha;
};

struct Branch {
  std::vector<Row> rows;
  Coord limit;
};

// Longest convergent branch inside one pool: follow the path with the most
// right turns; each right turn at level L contributes a row whose α comes
// from the 0-side subtree.
class BranchFinder {
 public:
  BranchFinder(const EmbeddedWorld& w, std::span<const Coord> pool) : trie_(w, pool) {}

  Branch run(std::int64_t floor) {
    std::vector<std::pair<detail::Range, Level>> turns;
    detail::Range node{0, trie_.size()};
    while (node.size() >= 2) {
      const Level level = trie_.split_level(node);
      auto [left, right] = trie_.children(node, level);
      if (1 + best(right) >= best(left)) {
        turns.emplace_back(left, level);
        node = right;
      } else {
        node = left;
      }
    }
    Branch out;
    out.limit = trie_.at(node.lo);
    std::int64_t prev = floor;
    for (const auto& [side, level] : turns) {
      std::optional<Coord> pick;
      for (std::size_t p = side.lo; p < side.hi; ++p) {
        Coord c = trie_.at(p);
        if (std::int64_t{c} > prev && c < out.limit && (!pick || c < *pick)) pick = c;
      }
      if (!pick) continue;
      out.rows.push_back({level, *pick});
      prev = *pick;
    }
    return out;
  }

 private:
  std::size_t best(detail::Range node) {
    if (node.size() < 2) return 0;
    auto key = std::make_pair(node.lo, node.hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto [left, right] = trie_.children(node, trie_.split_level(node));
    std::size_t value = std::max(best(left), 1 + best(right));
    memo_[key] = value;
    return value;
  }

  detail::ImageTrie trie_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo_;
};

// Largest a in [lo, hi] for which a constant a×b rectangle exists, by
// bisection. Budget overruns count as failures unless nothing succeeds.
std::optional<Rectangle> widest_rectangle(const GridColouring& g, std::size_t lo, std::size_t hi,
                                          std::size_t b, SearchLimits limits) {
  std::optional<Rectangle> best;
  bool resource = false;
  std::string resource_message;
  while (lo <= hi) {
    std::size_t a = lo + (hi - lo) / 2;
    std::optional<Rectangle> found;
    try {
      found = polarized_homogeneous(g, a, b, limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kResource) throw;
      resource = true;
      resource_message = e.what();
    }
    if (found) {
      best = std::move(found);
      lo = a + 1;
    } else {
      if (a == 0) break;
      hi = a - 1;
    }
  }
  if (!best && resource) throw Error(ErrorKind::kResource, resource_message);
  return best;
}

}  // namespace

ThinnedFamily thin_blocks(const EmbeddedWorld& w, const BlockFamily& bf, std::size_t m,
                          const ThinOptions& options) {
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "thin_blocks needs m >= 1");
  if (auto violation = block_family_violation(w, bf))
    throw Error(ErrorKind::kInvalidArgument, "thin_blocks: invalid block family: " + *violation);
  const std::size_t r = bf.r();

  std::vector<std::vector<Coord>> pools = bf.blocks;
  std::vector<Branch> branches(r);
  std::vector<std::vector<std::uint8_t>> u(r);
  std::int64_t floor = -1;

  for (std::size_t l = 0; l < r; ++l) {
    std::vector<Coord> pool;
    for (Coord c : pools[l])
      if (std::int64_t{c} > floor) pool.push_back(c);
    if (pool.empty()) fail("convergent-branch", l, "pool is empty above earlier blocks");
    Branch branch = BranchFinder(w, pool).run(floor);
    if (branch.rows.size() < m)
      fail("convergent-branch", l,
           "branch has " + std::to_string(branch.rows.size()) + " rows from a pool of " +
               std::to_string(pool.size()) + ", need " + std::to_string(m));

    for (std::size_t k = l + 1; k < r; ++k) {
      const auto& cols = pools[k];
      std::vector<Colour> table;
      table.reserve(branch.rows.size() * cols.size());
      for (const Row& row : branch.rows)
        for (Coord beta : cols) table.push_back(w.image(beta).bit(row.delta));
      GridColouring grid(branch.rows.size(), cols.size(), 2, std::move(table));
      // Prefer keeping many columns; give up columns before rows.
      std::optional<Rectangle> rect;
      std::size_t b = 0;
      std::optional<Error> budget;
      for (double share = options.keep_fraction; !rect; share /= 2) {
        b = std::max<std::size_t>(
            static_cast<std::size_t>(std::ceil(share * static_cast<double>(cols.size()))), 1);
        try {
          rect = widest_rectangle(grid, m, branch.rows.size(), b, options.limits);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kResource) throw;
          budget = e;
        }
        if (b <= options.min_columns) break;
      }
      if (!rect && budget) throw *budget;
      if (!rect)
        fail("stabilize-u", l,
             "no " + std::to_string(m) + "x" + std::to_string(b) +
                 " constant rectangle against block " + std::to_string(k) + " (" +
                 std::to_string(branch.rows.size()) + " rows, " + std::to_string(cols.size()) +
                 " columns)");
      std::vector<Row> kept;
      for (std::size_t i : rect->rows) kept.push_back(branch.rows[i]);
      branch.rows = std::move(kept);
      std::vector<Coord> survivors;
      for (Coord beta : cols) {
        bool constant = true;
        for (const Row& row : branch.rows)
          if (w.image(beta).bit(row.delta) != rect->colour) {
            constant = false;
            break;
          }
        if (constant) survivors.push_back(beta);
      }
      pools[k] = std::move(survivors);
      u[l].push_back(static_cast<std::uint8_t>(rect->colour));
    }
    floor = branch.limit;
    branches[l] = std::move(branch);
  }

  // Round robin: δ^0_t < δ^1_t < … < δ^{r−1}_t < δ^0_{t+1}.
  std::vector<std::size_t> cursor(r, 0);
  std::vector<std::vector<Row>> chosen(r);
  std::int64_t level = -1;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t l = 0; l < r; ++l) {
      const auto& rows = branches[l].rows;
      while (cursor[l] < rows.size() && std::int64_t{rows[cursor[l]].delta} <= level) ++cursor[l];
      if (cursor[l] == rows.size())
        fail("interleave", l,
             "only " + std::to_string(t) + " full rounds out of " + std::to_string(m) + " from " +
                 std::to_string(rows.size()) + " rows");
      chosen[l].push_back(rows[cursor[l]]);
      level = rows[cursor[l]].delta;
      ++cursor[l];
    }
  }

  ThinnedFamily tf;
  tf.m = m;
  tf.nu = bf.nu;
  tf.u = std::move(u);
  for (std::size_t l = 0; l < r; ++l) {
    std::vector<Coord> seq;
    std::vector<Level> deltas;
    for (const Row& row : chosen[l]) {
      seq.push_back(row.alpha);
      deltas.push_back(row.delta);
    }
    seq.push_back(branches[l].limit);
    tf.sequences.push_back(std::move(seq));
    tf.deltas.push_back(std::move(deltas));
  }
  if (auto violation = thinned_family_violation(w, tf))
    throw Error(ErrorKind::kInternal, "thin_blocks produced an invalid family: " + *violation);
  return tf;
}

}  // namespace sumset
