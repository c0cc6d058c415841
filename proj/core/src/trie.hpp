#pragma once

// Compressed binary trie over the images of a set of world indices. Nodes are
// contiguous ranges of the lexicographically sorted images.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "sumset/world.hpp"

namespace sumset::detail {

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const noexcept { return hi - lo; }
};

class ImageTrie {
 public:
  ImageTrie(const EmbeddedWorld& w, std::span<const Coord> members) : world_(&w) {
    order_.assign(members.begin(), members.end());
    std::sort(order_.begin(), order_.end(),
              [&](Coord a, Coord b) { return w.image(a) < w.image(b); });
  }

  std::size_t size() const noexcept { return order_.size(); }
  Coord at(std::size_t pos) const { return order_[pos]; }
  const BitSeq& image_at(std::size_t pos) const { return world_->image(order_[pos]); }

  /// Length of the common prefix of the images at positions a and b.
  std::size_t common_prefix(std::size_t a, std::size_t b) const {
    if (a == b) return world_->depth();
    return delta(image_at(a), image_at(b));
  }

  /// Level at which a range of at least two images first splits.
  Level split_level(Range r) const { return delta(image_at(r.lo), image_at(r.hi - 1)); }

  std::pair<Range, Range> children(Range r, Level level) const {
    std::size_t lo = r.lo, hi = r.hi;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (image_at(mid).bit(level))
        hi = mid;
      else
        lo = mid + 1;
    }
    return {Range{r.lo, lo}, Range{lo, r.hi}};
  }

  /// Members of a range, sorted by index.
  std::vector<Coord> indices(Range r) const {
    std::vector<Coord> out(order_.begin() + static_cast<std::ptrdiff_t>(r.lo),
                           order_.begin() + static_cast<std::ptrdiff_t>(r.hi));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const EmbeddedWorld* world_;
  std::vector<Coord> order_;
};

}  // namespace sumset::detail
