#pragma once

// The two monochromatic-sumset constructions and their replayable
// certificates: the leader extractor working from a homogeneous witness, and
// the full pipeline over an embedded world with canonical colourings.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sumset/family.hpp"
#include "sumset/group.hpp"
#include "sumset/world.hpp"

namespace sumset {

/// W = body followed by a tail of r−1 points (the shadow of α_ω, …, α_{ω+r−2}),
/// with the constant colour v_l of each pattern s_l.
struct HomogeneousWitness {
  std::vector<Coord> body;
  std::vector<Coord> tail;
  std::vector<Colour> v;

  std::vector<Coord> all() const;
  friend bool operator==(const HomogeneousWitness&, const HomogeneousWitness&) = default;
};

/// c(x) = v_l when x = s_l*a for some a ⊂ W, otherwise colour 0.
PointColouring synthetic_colouring(const HomogeneousWitness& hw, std::size_t r,
                                   Colour colour_count);

/// The pattern colourings c_{s_0}, …, c_{s_r} of one world, each given by a
/// type map of arity r+ℓ.
struct WorldColourings {
  std::size_t r = 0;
  Colour colour_count = 1;
  std::shared_ptr<const EmbeddedWorld> world;
  std::vector<TypeMap> type_maps;

  friend bool operator==(const WorldColourings& a, const WorldColourings& b) {
    return a.r == b.r && a.colour_count == b.colour_count && a.type_maps == b.type_maps &&
           (a.world == b.world || (a.world && b.world && *a.world == *b.world));
  }
};

/// c(x) = type_map_ℓ(type(F(supp x))) when supp x ⊂ W and x = s_ℓ*supp x;
/// every other element gets colour 0.
PointColouring world_colouring(const WorldColourings& wc);

struct LemmaData {
  HomogeneousWitness witness;
  std::vector<Coord> a;
  std::vector<std::vector<Coord>> b;
  std::vector<Coord> tail_part;

  friend bool operator==(const LemmaData&, const LemmaData&) = default;
};

struct PipelineData {
  WorldColourings colourings;
  BlockFamily blocks;
  ThinnedFamily family;
  /// Colour of the canonical ℓ-candidates, ℓ = 0..r.
  std::vector<Colour> candidate_colours;

  friend bool operator==(const PipelineData&, const PipelineData&) = default;
};

struct ExtractionCertificate {
  enum class Mode { kLemma, kPipeline };

  Mode mode = Mode::kLemma;
  std::size_t r = 0;
  std::size_t size = 0;
  std::size_t level = 0;  // ℓ
  std::size_t k = 0;
  Colour colour = 0;
  std::string inputs_digest;
  std::optional<LemmaData> lemma;
  std::optional<PipelineData> pipeline;
  std::vector<GroupElement> x;

  friend bool operator==(const ExtractionCertificate&, const ExtractionCertificate&) = default;
};

/// Throws kInvalidWitness when the witness is not homogeneous for c, kDomain
/// when the body is too short, kNoCollision never (r+1 values over r colours).
ExtractionCertificate leader_extract(const PointColouring& c, const HomogeneousWitness& hw,
                                     std::size_t r, std::size_t size);

struct PipelineOptions {
  /// 0 picks block sizes automatically, largest first.
  std::size_t min_block = 0;
  /// Longest thinned sequence attempted before uniformizing; 0 means 4·size.
  std::size_t max_thin = 0;
  ThinOptions thin;
  SearchLimits limits{2'000'000};
  /// Exhaustively re-check candidate uniformity when the count is at most this.
  std::size_t uniformity_check_limit = 200'000;
};

ExtractionCertificate run_pipeline(const WorldColourings& wc, std::size_t size,
                                   const PipelineOptions& options = {});

/// Digest of the construction inputs embedded in a certificate.
std::string inputs_digest(const ExtractionCertificate& cert);

/// The colouring a certificate was built against, rebuilt from its inputs.
PointColouring certificate_colouring(const ExtractionCertificate& cert);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Independent replay: rebuilds X from the structural data, checks the sum
/// shapes, the candidate conditions and c on all of X+X.
VerifyResult verify_certificate(const PointColouring& c, const ExtractionCertificate& cert);

}  // namespace sumset
