#include "sumset/cantor.hpp"

#include <algorithm>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_)
    if (b > 1) throw Error(ErrorKind::kInvalidArgument, "bit value must be 0 or 1");
}

BitSeq BitSeq::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw Error(ErrorKind::kParse, "bit string contains '" + std::string(1, ch) + "'");
    bits.push_back(ch == '1');
  }
  return BitSeq(std::move(bits));
}

std::string BitSeq::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BitSeq BitSeq::padded(std::size_t depth) const {
  if (depth < bits_.size())
    throw Error(ErrorKind::kDepth, "cannot pad depth " + std::to_string(bits_.size()) +
                                       " down to " + std::to_string(depth));
  std::vector<std::uint8_t> bits = bits_;
  bits.resize(depth, 0);
  return BitSeq(std::move(bits));
}

Level delta(const BitSeq& s, const BitSeq& t) {
  if (s.depth() != t.depth())
    throw Error(ErrorKind::kDepth, "delta of words with depths " + std::to_string(s.depth()) +
                                       " and " + std::to_string(t.depth()));
  const auto& a = s.bits();
  const auto& b = t.bits();
  auto [it, jt] = std::mismatch(a.begin(), a.end(), b.begin());
  if (it == a.end())
    throw Error(ErrorKind::kUndefinedDelta, "delta of equal words " + s.to_string());
  return static_cast<Level>(it - a.begin());
}

TupleOfSeqs::TupleOfSeqs(std::vector<BitSeq> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].depth() != coords_[0].depth())
      throw Error(ErrorKind::kDepth, "tuple mixes depths");
    for (std::size_t j = 0; j < i; ++j)
      if (coords_[i] == coords_[j])
        throw Error(ErrorKind::kInvalidArgument,
                    "tuple repeats the word " + coords_[i].to_string());
  }
}

std::size_t pair_index(std::size_t k, std::size_t a, std::size_t b) {
  // pairs (0,1),(0,2),…,(0,k−1),(1,2),…
  return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

std::uint32_t SimilarityType::rank_of(std::size_t a, std::size_t b) const {
  if (a == b) throw Error(ErrorKind::kInvalidArgument, "rank_of a coordinate with itself");
  if (a > b) std::swap(a, b);
  return pair_rank.at(pair_index(k, a, b));
}

std::string SimilarityType::key() const {
  std::string out = std::to_string(k) + ":";
  for (std::size_t i = 0; i < pair_rank.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(pair_rank[i]);
  }
  out.push_back(':');
  for (std::size_t l = 0; l < bit_matrix.size(); ++l) {
    if (l) out.push_back('/');
    for (auto b : bit_matrix[l]) out.push_back(b ? '1' : '0');
  }
  return out;
}

namespace {

bool prefix_less(const BitSeq& s, const BitSeq& t, std::size_t n) {
  return std::lexicographical_compare(s.bits().begin(), s.bits().begin() + n,
                                      t.bits().begin(), t.bits().begin() + n);
}

}  // namespace

bool similar(const TupleOfSeqs& t, const TupleOfSeqs& s) {
  if (t.size() != s.size())
    throw Error(ErrorKind::kInvalidArgument, "similar(): tuples of sizes " +
                                                 std::to_string(t.size()) + " and " +
                                                 std::to_string(s.size()));
  if (t.size() > 0 && t.depth() != s.depth())
    throw Error(ErrorKind::kDepth, "similar(): pad tuples to a common depth first");
  const std::size_t k = t.size();
  for (std::size_t l1 = 0; l1 < k; ++l1) {
    for (std::size_t l2 = 0; l2 < k; ++l2) {
      if (l1 == l2) continue;
      const Level n = delta(t[l1], t[l2]);
      const Level m = delta(s[l1], s[l2]);
      for (std::size_t l3 = 0; l3 < k; ++l3) {
        if ((t[l3].bit(n) == 0) != (s[l3].bit(m) == 0)) return false;
        for (std::size_t l4 = 0; l4 < k; ++l4) {
          if (l3 == l4) continue;
          if ((n < delta(t[l3], t[l4])) != (m < delta(s[l3], s[l4]))) return false;
          if (prefix_less(t[l3], t[l4], n) != prefix_less(s[l3], s[l4], m)) return false;
        }
      }
    }
  }
  return true;
}

SimilarityType similarity_type(const TupleOfSeqs& t) {
  SimilarityType type;
  const std::size_t k = t.size();
  type.k = static_cast<std::uint32_t>(k);
  std::vector<Level> raw;
  raw.reserve(k * (k - (k > 0)) / 2);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) raw.push_back(delta(t[a], t[b]));
  std::vector<Level> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  type.levels = static_cast<std::uint32_t>(distinct.size());
  type.pair_rank.reserve(raw.size());
  for (Level level : raw)
    type.pair_rank.push_back(static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), level) - distinct.begin()));
  type.bit_matrix.assign(k, std::vector<std::uint8_t>(distinct.size(), 0));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < distinct.size(); ++j)
      type.bit_matrix[l][j] = t[l].bit(distinct[j]);
  return type;
}

std::map<SimilarityType, TupleOfSeqs> type_representatives(std::size_t k,
                                                           std::size_t depth) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "enumerate_types needs k >= 1");
  if (depth > 20) throw Error(ErrorKind::kResource, "depth too large for enumeration");
  const std::size_t words = std::size_t{1} << depth;
  if (k > words) return {};

  std::vector<BitSeq> all;
  all.reserve(words);
  for (std::size_t w = 0; w < words; ++w) {
    std::vector<std::uint8_t> bits(depth);
    for (std::size_t i = 0; i < depth; ++i) bits[i] = (w >> (depth - 1 - i)) & 1U;
    all.emplace_back(std::move(bits));
  }

  std::map<SimilarityType, TupleOfSeqs> out;
  std::vector<std::size_t> idx(k, 0);
  std::vector<BitSeq> coords(k);
  // Odometer over ordered tuples; skip those with repeats.
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (idx[i] == idx[j]) {
          distinct = false;
          break;
        }
    if (distinct) {
      for (std::size_t i = 0; i < k; ++i) coords[i] = all[idx[i]];
      TupleOfSeqs tuple(coords);
      auto type = similarity_type(tuple);
      out.try_emplace(std::move(type), std::move(tuple));
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < words) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::set<SimilarityType> enumerate_types(std::size_t k, std::size_t depth) {
  std::set<SimilarityType> out;
  for (auto& [type, rep] : type_representatives(k, depth)) out.insert(type);
  return out;
}

TupleOfSeqs pad_to_depth(const TupleOfSeqs& t, std::size_t target) {
  if (target < t.depth())
    throw Error(ErrorKind::kDepth, "pad_to_depth target " + std::to_string(target) +
                                       " below depth " + std::to_string(t.depth()));
  std::vector<BitSeq> coords;
  coords.reserve(t.size());
  for (const auto& c : t.coords()) coords.push_back(c.padded(target));
  return TupleOfSeqs(std::move(coords));
}

}  // namespace sumset
