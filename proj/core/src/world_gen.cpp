#include "sumset/world_gen.hpp"

#include <random>
#include <string>

#include "sumset/error.hpp"
#include "sumset/hash.hpp"

namespace sumset {

namespace {

// Sampling is done directly on the raw engine output so that worlds are
// identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(mix64(seed)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  std::size_t binomial(std::size_t n, double p) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < n; ++t) hits += bernoulli(p);
    return hits;
  }
  std::size_t geometric(double p) {
    std::size_t failures = 0;
    while (!bernoulli(p)) ++failures;
    return failures;
  }

 private:
  std::mt19937_64 engine_;
};

class RandomTree {
 public:
  RandomTree(const WorldGenOptions& o) : o_(o), rng_(o.seed), words_(o.size, std::vector<std::uint8_t>(o.depth, 0)) {}

  std::vector<std::vector<std::uint8_t>> run() {
    if (o_.mode == WorldGenOptions::Mode::kComb && o_.teeth > 1)
      comb();
    else
      fill(0, o_.size, 0, 0, 1, 0);
    if (overflow_)
      throw Error(ErrorKind::kInvalidArgument,
                  "generate_world: depth " + std::to_string(o_.depth) + " is too small for " +
                      std::to_string(o_.size) + " words with seed " + std::to_string(o_.seed) +
                      " (needs " + std::to_string(deepest_ + 1) + ")");
    return std::move(words_);
  }

 private:
  void stamp_noise(std::size_t first, std::size_t count, std::size_t from, std::size_t to) {
    for (std::size_t level = from; level < to && level < o_.depth; ++level) {
      std::uint8_t b = rng_.bernoulli(o_.noise);
      for (std::size_t p = first; p < first + count; ++p) words_[p][level] = b;
    }
  }

  // A spine of teeth−1 branchings at levels 0, 1, …; tooth s branches only
  // at levels ≡ s (mod teeth) below it.
  void comb() {
    const std::size_t teeth = o_.teeth;
    if (o_.depth < teeth || o_.size < teeth) {
      overflow_ = true;
      deepest_ = teeth;
      return;
    }
    std::size_t first = 0, count = o_.size;
    for (std::size_t s = 0; s + 1 < teeth; ++s) {
      const std::size_t left = count / (teeth - s);
      for (std::size_t p = first + left; p < first + count; ++p) words_[p][s] = 1;
      fill(first, left, s + 1, teeth, teeth, s);
      first += left;
      count -= left;
    }
    fill(first, count, teeth - 1, teeth, teeth, teeth - 1);
  }

  // Splits happen at levels ≡ residue (mod stride) only.
  void fill(std::size_t first, std::size_t count, std::size_t level, std::size_t branchings,
            std::size_t stride, std::size_t residue) {
    if (count == 1) {
      stamp_noise(first, 1, level, o_.depth);
      return;
    }
    std::size_t split = level + stride * rng_.geometric(o_.gap_p);
    while (split % stride != residue) ++split;
    deepest_ = std::max(deepest_, split);
    if (split >= o_.depth) {
      overflow_ = true;
      return;
    }
    stamp_noise(first, count, level, split);
    const double share = branchings < o_.balanced_top ? 0.5 : o_.left_share;
    const std::size_t zeros = 1 + rng_.binomial(count - 2, share);
    for (std::size_t p = first + zeros; p < first + count; ++p) words_[p][split] = 1;
    fill(first, zeros, split + 1, branchings + 1, stride, residue);
    fill(first + zeros, count - zeros, split + 1, branchings + 1, stride, residue);
  }

  const WorldGenOptions& o_;
  Sampler rng_;
  std::vector<std::vector<std::uint8_t>> words_;
  bool overflow_ = false;
  std::size_t deepest_ = 0;
};

}  // namespace

EmbeddedWorld generate_world(const WorldGenOptions& options) {
  if (options.depth == 0) throw Error(ErrorKind::kInvalidArgument, "generate_world needs depth >= 1");
  std::map<Coord, BitSeq> embed;
  if (options.mode == WorldGenOptions::Mode::kComplete) {
    if (options.depth > 20)
      throw Error(ErrorKind::kInvalidArgument, "complete worlds are limited to depth 20");
    const std::size_t n = std::size_t{1} << options.depth;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::uint8_t> bits(options.depth);
      for (std::size_t level = 0; level < options.depth; ++level)
        bits[level] = (v >> (options.depth - 1 - level)) & 1;
      embed.emplace(static_cast<Coord>(v), BitSeq(std::move(bits)));
    }
    return EmbeddedWorld(options.depth, std::move(embed));
  }
  if (options.size == 0) return EmbeddedWorld(options.depth, {});
  if (!(options.left_share > 0 && options.left_share < 1) || !(options.gap_p > 0 && options.gap_p <= 1) ||
      !(options.noise >= 0 && options.noise <= 1))
    throw Error(ErrorKind::kInvalidArgument, "generate_world: probabilities out of range");
  auto words = RandomTree(options).run();
  for (std::size_t p = 0; p < words.size(); ++p)
    embed.emplace(static_cast<Coord>(p), BitSeq(std::move(words[p])));
  return EmbeddedWorld(options.depth, std::move(embed));
}

std::vector<TypeMap> generate_type_maps(std::size_t r, Colour colours, std::uint64_t seed) {
  std::vector<TypeMap> maps;
  for (std::size_t l = 0; l <= r; ++l) maps.push_back(TypeMap::hashed(colours, mix64(seed + l)));
  return maps;
}

}  // namespace sumset
