#include <algorithm>
#include <numeric>
#include <string>

#include "sumset/error.hpp"
#include "sumset/family.hpp"
#include "trie.hpp"

namespace sumset {

std::optional<std::string> block_family_violation(const EmbeddedWorld& w, const BlockFamily& bf) {
  const std::size_t r = bf.r();
  if (r == 0) return "no blocks";
  if (bf.nu.size() != r - 1) return "expected " + std::to_string(r - 1) + " nu levels";
  for (std::size_t l = 1; l < bf.nu.size(); ++l)
    if (bf.nu[l - 1] >= bf.nu[l]) return "nu levels are not strictly increasing";
  for (std::size_t l = 0; l < r; ++l) {
    const auto& block = bf.blocks[l];
    if (block.empty()) return "block " + std::to_string(l) + " is empty";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!w.contains(block[i])) return "block " + std::to_string(l) + " leaves the world";
      if (i > 0 && block[i - 1] >= block[i])
        return "block " + std::to_string(l) + " is not increasing";
    }
  }
  // Δ is an ultrametric, so every pairwise condition reduces to comparisons
  // with one representative per block.
  auto agree_beyond = [&](const std::vector<Coord>& block, Level level) {
    for (Coord a : block)
      if (a != block.front() && w.delta_f(a, block.front()) <= level) return false;
    return true;
  };
  auto image_range = [&](const std::vector<Coord>& block) {
    auto [lo, hi] = std::minmax_element(block.begin(), block.end(), [&](Coord a, Coord b) {
      return w.image(a) < w.image(b);
    });
    return std::make_pair(*lo, *hi);
  };
  for (std::size_t l = 0; l < r; ++l) {
    if (r >= 2 && !agree_beyond(bf.blocks[l], bf.nu[r - 2]))
      return "block " + std::to_string(l) + " splits at or below nu_{r-2}";
    for (std::size_t k = l + 1; k < r; ++k) {
      if (bf.blocks[l].back() >= bf.blocks[k].front())
        return "index order fails between blocks " + std::to_string(l) + " and " +
               std::to_string(k);
      if (!(w.image(image_range(bf.blocks[l]).second) < w.image(image_range(bf.blocks[k]).first)))
        return "image order fails between blocks " + std::to_string(l) + " and " +
               std::to_string(k);
      if (w.delta_f(bf.blocks[l].front(), bf.blocks[k].front()) != bf.nu[l])
        return "delta between blocks " + std::to_string(l) + " and " + std::to_string(k) +
               " is not nu_" + std::to_string(l);
    }
  }
  return std::nullopt;
}

namespace {

// Largest run of elements sharing the first `length` bits, inside `range`.
// Ties go to the lexicographically largest prefix.
detail::Range best_group(const detail::ImageTrie& trie, detail::Range range, std::size_t length) {
  detail::Range best{range.lo, range.lo};
  std::size_t start = range.lo;
  for (std::size_t p = range.lo + 1; p <= range.hi; ++p) {
    bool boundary = p == range.hi || trie.common_prefix(start, p) < length;
    if (!boundary) continue;
    if (p - start >= best.size()) best = {start, p};
    start = p;
  }
  return best;
}

// Enforces index order across blocks without breaking the lex structure.
// Returns the achieved minimum block size.
std::size_t separate_indices(std::vector<std::vector<Coord>>& blocks) {
  bool separated = true;
  for (std::size_t l = 1; l < blocks.size(); ++l)
    if (blocks[l - 1].back() >= blocks[l].front()) separated = false;
  if (separated) {
    std::size_t least = blocks[0].size();
    for (const auto& b : blocks) least = std::min(least, b.size());
    return least;
  }
  auto feasible = [&](std::size_t b, std::vector<std::vector<Coord>>* out) {
    std::int64_t prev = -1;
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      auto it = std::upper_bound(blocks[l].begin(), blocks[l].end(), prev,
                                 [](std::int64_t v, Coord c) { return v < std::int64_t{c}; });
      if (static_cast<std::size_t>(blocks[l].end() - it) < b) return false;
      auto stop = l + 1 == blocks.size() ? blocks[l].end() : it + static_cast<std::ptrdiff_t>(b);
      if (out) (*out)[l].assign(it, stop);
      if (b > 0) prev = *(it + static_cast<std::ptrdiff_t>(b) - 1);
    }
    return true;
  };
  std::size_t lo = 0, hi = blocks[0].size();
  for (const auto& b : blocks) hi = std::min(hi, b.size());
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (feasible(mid, nullptr))
      lo = mid;
    else
      hi = mid - 1;
  }
  std::vector<std::vector<Coord>> out(blocks.size());
  feasible(lo, &out);
  blocks = std::move(out);
  return lo;
}

struct Ancestor {
  detail::Range left;  // the 0-child of a node whose 1-child lies on the spine
  Level level;
};

class BlockSearch {
 public:
  BlockSearch(const detail::ImageTrie& trie, std::size_t r, std::size_t min_block)
      : trie_(trie), r_(r), min_block_(min_block) {}

  std::optional<BlockFamily> run() {
    std::vector<Ancestor> spine;
    return visit({0, trie_.size()}, spine);
  }

  std::size_t best_achievable() const noexcept { return best_; }

 private:
  std::optional<BlockFamily> visit(detail::Range node, std::vector<Ancestor>& spine) {
    if (node.size() < 2) return std::nullopt;
    const Level level = trie_.split_level(node);
    auto [left, right] = trie_.children(node, level);
    if (auto found = try_node(left, right, level, spine)) return found;
    spine.push_back({left, level});
    auto found = visit(right, spine);
    spine.pop_back();
    if (found) return found;
    return visit(left, spine);
  }

  std::optional<BlockFamily> try_node(detail::Range left, detail::Range right, Level level,
                                      const std::vector<Ancestor>& spine) {
    const std::size_t earlier = r_ - 2;
    std::vector<std::vector<Coord>> blocks;
    std::vector<Level> nu;
    std::size_t least = std::min(left.size(), right.size());
    for (const auto& a : spine) {
      if (nu.size() == earlier) break;
      detail::Range group = best_group(trie_, a.left, level + 1);
      if (group.size() < min_block_) {
        best_ = std::max(best_, std::min(least, group.size()));
        continue;
      }
      least = std::min(least, group.size());
      blocks.push_back(trie_.indices(group));
      nu.push_back(a.level);
    }
    if (nu.size() < earlier) return std::nullopt;
    blocks.push_back(trie_.indices(left));
    blocks.push_back(trie_.indices(right));
    nu.push_back(level);
    least = separate_indices(blocks);
    best_ = std::max(best_, least);
    if (least < min_block_) return std::nullopt;
    return BlockFamily{std::move(blocks), std::move(nu)};
  }

  const detail::ImageTrie& trie_;
  std::size_t r_;
  std::size_t min_block_;
  std::size_t best_ = 0;
};

}  // namespace

BlockFamily select_blocks(const EmbeddedWorld& w, std::size_t r, std::size_t min_block) {
  if (r == 0) throw Error(ErrorKind::kInvalidArgument, "select_blocks needs r >= 1");
  if (r == 1) {
    if (w.size() < std::max<std::size_t>(min_block, 1))
      throw Error(ErrorKind::kInsufficientWorld,
                  "select_blocks: world has " + std::to_string(w.size()) +
                      " elements, need a block of " + std::to_string(min_block) +
                      "; largest achievable block size " + std::to_string(w.size()));
    return BlockFamily{{w.indices()}, {}};
  }
  detail::ImageTrie trie(w, w.indices());
  BlockSearch search(trie, r, std::max<std::size_t>(min_block, 1));
  auto found = search.run();
  if (!found)
    throw Error(ErrorKind::kInsufficientWorld,
                "select_blocks: no family of " + std::to_string(r) + " blocks of size >= " +
                    std::to_string(min_block) + "; largest achievable block size " +
                    std::to_string(search.best_achievable()));
  if (auto violation = block_family_violation(w, *found))
    throw Error(ErrorKind::kInternal, "select_blocks produced an invalid family: " + *violation);
  return *found;
}

}  // namespace sumset
