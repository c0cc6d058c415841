#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumset {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class ErrorKind {
  kInvalidArgument,    // malformed input: bad level, arity, ordering, shape
  kUndefinedDelta,     // Δ of two equal sequences
  kDepth,              // depth mismatch or bad padding target
  kDomain,             // index outside a world or carrier
  kIncompleteMap,      // type map lacks a realized type
  kInsufficientWorld,  // world/block too small for a construction step
  kThinningFailure,    // a thinning stage ran out of elements
  kUniformization,     // no homogeneous index set inside the sequence
  kNoCollision,        // pigeonhole precondition not met
  kInvalidWitness,     // a homogeneity witness does not hold up on re-check
  kNotCanonical,       // colouring is not F-canonical
  kResource,           // search budget/horizon exceeded
  kInternal,           // a verified post-condition failed: a defect
  kParse,              // JSON/file decoding
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kUndefinedDelta: return "undefined-delta";
    case ErrorKind::kDepth: return "depth";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kIncompleteMap: return "incomplete-map";
    case ErrorKind::kInsufficientWorld: return "insufficient-world";
    case ErrorKind::kThinningFailure: return "thinning-failure";
    case ErrorKind::kUniformization: return "uniformization-failure";
    case ErrorKind::kNoCollision: return "no-collision";
    case ErrorKind::kInvalidWitness: return "invalid-witness";
    case ErrorKind::kNotCanonical: return "not-canonical";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kInternal: return "internal-invariant";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace sumset
