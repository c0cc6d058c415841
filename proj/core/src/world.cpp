#include "sumset/world.hpp"

#include <algorithm>
#include <string>

#include "sumset/error.hpp"
#include "sumset/hash.hpp"

namespace sumset {

EmbeddedWorld::EmbeddedWorld(std::size_t depth, std::map<Coord, BitSeq> embed)
    : depth_(depth) {
  indices_.reserve(embed.size());
  images_.reserve(embed.size());
  for (auto& [index, word] : embed) {
    if (word.depth() != depth)
      throw Error(ErrorKind::kDepth, "index " + std::to_string(index) + " embeds a word of depth " +
                                         std::to_string(word.depth()) + ", world depth is " +
                                         std::to_string(depth));
    indices_.push_back(index);
    images_.push_back(std::move(word));
  }
  std::vector<BitSeq> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(ErrorKind::kInvalidArgument, "embedding is not injective: " + dup->to_string());
}

bool EmbeddedWorld::contains(Coord index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

const BitSeq& EmbeddedWorld::image(Coord index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index)
    throw Error(ErrorKind::kDomain, "index " + std::to_string(index) + " is not in the world");
  return images_[static_cast<std::size_t>(it - indices_.begin())];
}

TupleOfSeqs EmbeddedWorld::image_of(std::span<const Coord> tuple) const {
  std::vector<BitSeq> coords;
  coords.reserve(tuple.size());
  for (Coord a : tuple) coords.push_back(image(a));
  return TupleOfSeqs(std::move(coords));
}

EmbeddedWorld EmbeddedWorld::restricted(std::span<const Coord> subset) const {
  std::map<Coord, BitSeq> embed;
  for (Coord a : subset) embed.emplace(a, image(a));
  return EmbeddedWorld(depth_, std::move(embed));
}

TypeMap TypeMap::constant_map(Colour colour_count, Colour colour) {
  TypeMap map;
  map.kind = Kind::kConstant;
  map.colour_count = colour_count;
  map.constant = colour;
  return map;
}

TypeMap TypeMap::hashed(Colour colour_count, std::uint64_t seed) {
  TypeMap map;
  map.kind = Kind::kHash;
  map.colour_count = colour_count;
  map.seed = seed;
  return map;
}

Colour TypeMap::colour_of(const SimilarityType& type) const {
  auto it = table.find(type);
  if (it != table.end()) return it->second;
  switch (kind) {
    case Kind::kTable:
      throw Error(ErrorKind::kIncompleteMap, "type map has no colour for type " + type.key());
    case Kind::kConstant:
      return constant;
    case Kind::kHash: {
      std::uint64_t h = fnv1a(type.key(), mix64(seed));
      return static_cast<Colour>(mix64(h) % colour_count);
    }
  }
  throw Error(ErrorKind::kInternal, "unknown type map kind");
}

namespace {

void check_tuple(const EmbeddedWorld& w, std::span<const Coord> a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!w.contains(a[i]))
      throw Error(ErrorKind::kDomain, "index " + std::to_string(a[i]) + " is not in the world");
    if (i > 0 && a[i - 1] >= a[i])
      throw Error(ErrorKind::kInvalidArgument, "index tuple is not strictly increasing");
  }
}

}  // namespace

bool f_similar(const EmbeddedWorld& w, std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::kInvalidArgument, "f_similar: tuples of different length");
  check_tuple(w, a);
  check_tuple(w, b);
  return similar(w.image_of(a), w.image_of(b));
}

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

CanonicityResult is_f_canonical(const SetColouring& d, const EmbeddedWorld& w,
                                std::uint64_t max_tuples) {
  const std::size_t k = d.arity();
  if (binomial(w.size(), k) > max_tuples)
    throw Error(ErrorKind::kResource, "is_f_canonical: C(" + std::to_string(w.size()) + "," +
                                          std::to_string(k) + ") tuples exceed the limit");
  CanonicityResult result;
  std::map<SimilarityType, std::pair<std::vector<Coord>, Colour>> seen;
  std::span<const Coord> items(w.indices());
  for_each_subset<Coord>(items, k, [&](std::span<const Coord> tuple) {
    ++result.tuples_checked;
    Colour colour = d(tuple);
    auto type = similarity_type(w.image_of(tuple));
    auto [it, inserted] =
        seen.try_emplace(std::move(type), std::vector<Coord>(tuple.begin(), tuple.end()), colour);
    if (!inserted && it->second.second != colour) {
      result.canonical = false;
      result.witness.emplace(it->second.first, std::vector<Coord>(tuple.begin(), tuple.end()));
      return false;
    }
    return true;
  });
  return result;
}

SetColouring induce_from_types(const CanonicalColouring& cc) {
  if (!cc.world) throw Error(ErrorKind::kInvalidArgument, "canonical colouring without a world");
  auto world = cc.world;
  auto map = std::make_shared<const TypeMap>(cc.type_map);
  if (map->kind == TypeMap::Kind::kTable && binomial(world->size(), cc.k) <= 1'000'000) {
    std::span<const Coord> items(world->indices());
    for_each_subset<Coord>(items, cc.k, [&](std::span<const Coord> tuple) {
      map->colour_of(similarity_type(world->image_of(tuple)));
      return true;
    });
  }
  return SetColouring(
      cc.k,
      [world, map](std::span<const Coord> tuple) {
        return map->colour_of(similarity_type(world->image_of(tuple)));
      },
      world->indices());
}

}  // namespace sumset
