#include "sumset/extraction.hpp"

#include <algorithm>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

std::vector<Coord> HomogeneousWitness::all() const {
  std::vector<Coord> out = body;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

namespace {

// l with x = s_l * supp(x), if any.
std::optional<std::size_t> pattern_level(const GroupElement& x, std::size_t r) {
  const std::size_t n = x.support_size();
  if (n < r || n > 2 * r) return std::nullopt;
  const std::size_t l = n - r;
  if (values_along_support(x) != make_pattern(r, l).values()) return std::nullopt;
  return l;
}

std::string show(const GroupElement& x) {
  std::string out = "{";
  bool first = true;
  for (const auto& [coord, value] : x.entries()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(coord) + ":" + std::to_string(value);
  }
  return out + "}";
}

}  // namespace

PointColouring synthetic_colouring(const HomogeneousWitness& hw, std::size_t r,
                                   Colour colour_count) {
  std::vector<Coord> members = hw.all();
  std::sort(members.begin(), members.end());
  return PointColouring(colour_count, [members, v = hw.v, r](const GroupElement& x) -> Colour {
    auto l = pattern_level(x, r);
    if (!l || *l >= v.size()) return 0;
    for (Coord a : x.support())
      if (!std::binary_search(members.begin(), members.end(), a)) return 0;
    return v[*l];
  });
}

PointColouring world_colouring(const WorldColourings& wc) {
  if (!wc.world) throw Error(ErrorKind::kInvalidArgument, "world colouring without a world");
  if (wc.type_maps.size() != wc.r + 1)
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(wc.r + 1) + " type maps, got " +
                    std::to_string(wc.type_maps.size()));
  auto world = wc.world;
  auto maps = wc.type_maps;
  const std::size_t r = wc.r;
  return PointColouring(wc.colour_count, [world, maps, r](const GroupElement& x) -> Colour {
    auto l = pattern_level(x, r);
    if (!l) return 0;
    std::vector<Coord> supp = x.support();
    for (Coord a : supp)
      if (!world->contains(a)) return 0;
    return maps[*l].colour_of(similarity_type(world->image_of(supp)));
  });
}

ExtractionCertificate leader_extract(const PointColouring& c, const HomogeneousWitness& hw,
                                     std::size_t r, std::size_t size) {
  if (r == 0) throw Error(ErrorKind::kInvalidArgument, "leader_extract needs r >= 1");
  if (hw.tail.size() != r - 1)
    throw Error(ErrorKind::kInvalidWitness, "witness tail must have r-1 = " +
                                                std::to_string(r - 1) + " points");
  if (hw.v.size() != r + 1)
    throw Error(ErrorKind::kInvalidWitness, "witness needs r+1 pattern colours");
  const std::vector<Coord> all = hw.all();
  for (std::size_t p = 1; p < all.size(); ++p)
    if (all[p - 1] >= all[p])
      throw Error(ErrorKind::kInvalidWitness, "witness body and tail must be increasing");

  const auto [level, k] = pigeonhole_pair(hw.v);
  const std::size_t need = 2 * level + size * (k - level);
  if (hw.body.size() < need)
    throw Error(ErrorKind::kDomain, "leader_extract: body of " + std::to_string(hw.body.size()) +
                                        " points, need " + std::to_string(need) + " for l=" +
                                        std::to_string(level) + ", k=" + std::to_string(k));

  LemmaData data;
  data.witness = hw;
  data.a.assign(hw.body.begin(), hw.body.begin() + static_cast<std::ptrdiff_t>(2 * level));
  for (std::size_t i = 0; i < size; ++i) {
    auto from = hw.body.begin() + static_cast<std::ptrdiff_t>(2 * level + i * (k - level));
    data.b.emplace_back(from, from + static_cast<std::ptrdiff_t>(k - level));
  }
  data.tail_part.assign(hw.tail.begin(), hw.tail.begin() + static_cast<std::ptrdiff_t>(r - k));

  ExtractionCertificate cert;
  cert.mode = ExtractionCertificate::Mode::kLemma;
  cert.r = r;
  cert.size = size;
  cert.level = level;
  cert.k = k;
  cert.colour = hw.v[level];
  for (std::size_t i = 0; i < size; ++i) {
    std::map<Coord, Value> entries;
    for (Coord a : data.a) entries[a] = 1;
    for (Coord a : data.b[i]) entries[a] = 2;
    for (Coord a : data.tail_part) entries[a] = 2;
    cert.x.emplace_back(std::move(entries));
  }
  cert.lemma = std::move(data);
  cert.inputs_digest = inputs_digest(cert);

  // Only the subsets used by the construction are re-checked against c.
  ElementSet xs(cert.x.begin(), cert.x.end());
  for (const GroupElement& s : sumset(xs)) {
    const Colour got = c(s);
    const std::size_t l = s.support_size() - r;
    if (got != hw.v[l])
      throw Error(ErrorKind::kInvalidWitness, "c" + show(s) + " = " + std::to_string(got) +
                                                  " but the witness claims v_" +
                                                  std::to_string(l) + " = " +
                                                  std::to_string(hw.v[l]));
  }
  auto verdict = verify_certificate(c, cert);
  if (!verdict.ok)
    throw Error(ErrorKind::kInternal, "leader_extract certificate failed verification: " +
                                          verdict.diagnostics.front());
  return cert;
}

namespace {

struct Thinned {
  BlockFamily blocks;
  ThinnedFamily family;
};

Thinned thin_world(const EmbeddedWorld& w, std::size_t r, std::size_t size,
                   const PipelineOptions& options) {
  std::vector<std::size_t> block_sizes;
  if (options.min_block) {
    block_sizes.push_back(options.min_block);
  } else {
    for (std::size_t b = std::max<std::size_t>(w.size() / r, 1); b > size; b /= 2)
      block_sizes.push_back(b);
    if (block_sizes.empty() || block_sizes.back() != size + 1) block_sizes.push_back(size + 1);
  }
  const std::size_t max_thin = options.max_thin ? options.max_thin : 4 * size;

  std::optional<Error> last;
  for (std::size_t b : block_sizes) {
    std::optional<BlockFamily> bf;
    try {
      bf = select_blocks(w, r, b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInsufficientWorld) throw;
      last = e;
      continue;
    }
    for (std::size_t m = max_thin; m >= size && m > 0; --m) {
      std::optional<ThinnedFamily> tf;
      try {
        tf = thin_blocks(w, *bf, m, options.thin);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kThinningFailure && e.kind() != ErrorKind::kResource) throw;
        last = e;
        continue;
      }
      try {
        return {*bf, uniformize_ev(w, *tf, size, options.limits)};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUniformization) throw;
        last = e;
      }
    }
  }
  if (last) throw *last;
  throw Error(ErrorKind::kInsufficientWorld, "run_pipeline: no block size to try");
}

std::size_t candidate_count_bound(std::size_t r, std::size_t m) {
  std::uint64_t bound = binomial(m + r, r);
  for (std::size_t t = 0; t < r; ++t) bound = bound > UINT64_MAX / (m + 1) ? UINT64_MAX : bound * (m + 1);
  return bound;
}

}  // namespace

ExtractionCertificate run_pipeline(const WorldColourings& wc, std::size_t size,
                                   const PipelineOptions& options) {
  const std::size_t r = wc.r;
  if (r == 0) throw Error(ErrorKind::kInvalidArgument, "run_pipeline needs r >= 1");
  if (size == 0) throw Error(ErrorKind::kInvalidArgument, "run_pipeline needs size >= 1");
  const PointColouring c = world_colouring(wc);
  const EmbeddedWorld& w = *wc.world;

  Thinned thinned = thin_world(w, r, size, options);
  const ThinnedFamily& tf = thinned.family;

  const EmbeddedWorld local = w.restricted(tf.union_indices());
  for (std::size_t l = 0; l <= r; ++l) {
    auto verdict = is_f_canonical(induced_colouring(c, make_pattern(r, l)), local);
    if (!verdict.canonical) {
      std::string detail;
      if (verdict.witness) {
        auto list = [](const std::vector<Coord>& t) {
          std::string s = "(";
          for (std::size_t p = 0; p < t.size(); ++p) s += (p ? "," : "") + std::to_string(t[p]);
          return s + ")";
        };
        detail = ": " + list(verdict.witness->first) + " and " + list(verdict.witness->second);
      }
      throw Error(ErrorKind::kNotCanonical,
                  "c_{s_" + std::to_string(l) + "} is not F-canonical" + detail);
    }
  }
  if (candidate_count_bound(r, tf.m) <= options.uniformity_check_limit)
    if (auto bad = candidate_uniformity_violation(w, tf))
      throw Error(ErrorKind::kInternal, "run_pipeline: " + *bad);

  PipelineData data;
  data.colourings = wc;
  data.blocks = thinned.blocks;
  data.family = tf;
  for (std::size_t l = 0; l <= r; ++l) {
    auto tuple = candidate_tuple(tf, distinguished_candidate(tf, l, l, 0));
    data.candidate_colours.push_back(c(apply_pattern(make_pattern(r, l), tuple)));
  }
  const auto [level, k] = pigeonhole_pair(data.candidate_colours);

  ExtractionCertificate cert;
  cert.mode = ExtractionCertificate::Mode::kPipeline;
  cert.r = r;
  cert.size = size;
  cert.level = level;
  cert.k = k;
  cert.colour = data.candidate_colours[level];
  for (std::size_t i = 0; i < size; ++i) {
    std::map<Coord, Value> entries;
    for (std::size_t l = 0; l < r; ++l) {
      if (l < level) {
        entries[tf.alpha(l, 0)] = 1;
        entries[tf.limit(l)] = 1;
      } else {
        entries[l < k ? tf.alpha(l, i) : tf.limit(l)] = 2;
      }
    }
    cert.x.emplace_back(std::move(entries));
  }
  cert.pipeline = std::move(data);
  cert.inputs_digest = inputs_digest(cert);

  auto verdict = verify_certificate(c, cert);
  if (!verdict.ok)
    throw Error(ErrorKind::kInternal,
                "run_pipeline certificate failed verification: " + verdict.diagnostics.front());
  return cert;
}

}  // namespace sumset
