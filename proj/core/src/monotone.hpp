#pragma once

#include <span>
#include <vector>

namespace sumset::detail {

/// Visits every non-decreasing vector of length `len` over {0..top−1} in
/// lexicographic order; stops early when `visit` returns false.
template <typename Visit>
bool for_each_monotone(std::size_t len, std::size_t top, Visit&& visit) {
  if (len == 0) return visit(std::span<const std::size_t>{});
  if (top == 0) return true;
  std::vector<std::size_t> v(len, 0);
  while (true) {
    if (!visit(std::span<const std::size_t>(v))) return false;
    std::size_t pos = len;
    while (pos > 0 && v[pos - 1] == top - 1) --pos;
    if (pos == 0) return true;
    ++v[pos - 1];
    for (std::size_t q = pos; q < len; ++q) v[q] = v[pos - 1];
  }
}

}  // namespace sumset::detail
