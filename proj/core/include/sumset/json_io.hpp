#pragma once

// JSON forms of every artifact the tools exchange. Objects serialize with
// sorted keys, so dump() output is canonical.

#include <string>

#include <nlohmann/json.hpp>

#include "sumset/adversary.hpp"
#include "sumset/error.hpp"
#include "sumset/extraction.hpp"
#include "sumset/family.hpp"
#include "sumset/world.hpp"

namespace sumset {

using Json = nlohmann::json;

inline constexpr const char* kCertificateSchema = "cert_v1";

void to_json(Json& j, const GroupElement& x);
void from_json(const Json& j, GroupElement& x);
void to_json(Json& j, const Pattern& s);
void from_json(const Json& j, Pattern& s);
void to_json(Json& j, const BitSeq& s);
void from_json(const Json& j, BitSeq& s);
void to_json(Json& j, const SimilarityType& t);
void from_json(const Json& j, SimilarityType& t);
void to_json(Json& j, const EmbeddedWorld& w);
void from_json(const Json& j, EmbeddedWorld& w);
void to_json(Json& j, const TypeMap& m);
void from_json(const Json& j, TypeMap& m);
void to_json(Json& j, const BlockFamily& bf);
void from_json(const Json& j, BlockFamily& bf);
void to_json(Json& j, const ThinnedFamily& tf);
void from_json(const Json& j, ThinnedFamily& tf);
void to_json(Json& j, const HomogeneousWitness& hw);
void from_json(const Json& j, HomogeneousWitness& hw);
void to_json(Json& j, const WorldColourings& wc);
void from_json(const Json& j, WorldColourings& wc);
void to_json(Json& j, const ExtractionCertificate& cert);
void from_json(const Json& j, ExtractionCertificate& cert);
void to_json(Json& j, const SearchReport& report);
void from_json(const Json& j, SearchReport& report);
void to_json(Json& j, const EstimateReport& report);
void from_json(const Json& j, EstimateReport& report);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Parses text into T; any syntax or schema problem becomes kParse.
template <typename T>
T parse_as(const std::string& text) {
  try {
    return Json::parse(text).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
}

/// Reads a whole file; throws kParse when it cannot be opened.
std::string read_file(const std::string& path);
/// Writes a whole file; throws kParse when it cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace sumset
