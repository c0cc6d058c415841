#include "sumset/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sumset/error.hpp"

namespace sumset {

namespace {

// nlohmann's own exceptions already carry the failing key; this adds the
// semantic checks its type system cannot express.
[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::kParse, "schema: " + what);
}

Coord parse_coord(const std::string& key) {
  Coord coord = 0;
  auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), coord);
  if (key.empty() || ec != std::errc{} || end != key.data() + key.size())
    schema_error("coordinate '" + key + "' is not a natural number");
  return coord;
}

}  // namespace

void to_json(Json& j, const GroupElement& x) {
  Json entries = Json::object();
  for (const auto& [coord, value] : x.entries()) entries[std::to_string(coord)] = value;
  j = Json{{"entries", std::move(entries)}};
}

void from_json(const Json& j, GroupElement& x) {
  std::map<Coord, Value> entries;
  for (const auto& [key, value] : j.at("entries").items())
    entries.emplace(parse_coord(key), value.get<Value>());
  x = GroupElement(std::move(entries));
}

void to_json(Json& j, const Pattern& s) { j = s.values(); }
void from_json(const Json& j, Pattern& s) { s = Pattern(j.get<std::vector<Value>>()); }

void to_json(Json& j, const BitSeq& s) { j = s.to_string(); }
void from_json(const Json& j, BitSeq& s) { s = BitSeq::from_string(j.get<std::string>()); }

void to_json(Json& j, const SimilarityType& t) {
  std::vector<std::string> rows;
  for (const auto& row : t.bit_matrix) {
    std::string text;
    for (auto b : row) text.push_back(b ? '1' : '0');
    rows.push_back(std::move(text));
  }
  j = Json{{"k", t.k}, {"levels", t.levels}, {"pair_rank", t.pair_rank}, {"bit_matrix", rows}};
}

void from_json(const Json& j, SimilarityType& t) {
  t.k = j.at("k").get<std::uint32_t>();
  t.levels = j.at("levels").get<std::uint32_t>();
  t.pair_rank = j.at("pair_rank").get<std::vector<std::uint32_t>>();
  t.bit_matrix.clear();
  for (const auto& row : j.at("bit_matrix")) {
    std::vector<std::uint8_t> bits;
    for (char ch : row.get<std::string>()) {
      if (ch != '0' && ch != '1') schema_error("bit_matrix rows are 0/1 strings");
      bits.push_back(ch == '1');
    }
    t.bit_matrix.push_back(std::move(bits));
  }
  if (t.pair_rank.size() != std::size_t{t.k} * (t.k - (t.k > 0)) / 2 ||
      t.bit_matrix.size() != t.k)
    schema_error("similarity type has inconsistent sizes");
}

void to_json(Json& j, const EmbeddedWorld& w) {
  Json embed = Json::object();
  for (Coord a : w.indices()) embed[std::to_string(a)] = w.image(a).to_string();
  j = Json{{"depth", w.depth()}, {"indices", w.indices()}, {"embed", std::move(embed)}};
}

void from_json(const Json& j, EmbeddedWorld& w) {
  auto indices = j.at("indices").get<std::vector<Coord>>();
  std::map<Coord, BitSeq> embed;
  for (const auto& [key, image] : j.at("embed").items())
    embed.emplace(parse_coord(key), BitSeq::from_string(image.get<std::string>()));
  if (indices.size() != embed.size()) schema_error("indices and embed differ in size");
  for (std::size_t p = 0; p < indices.size(); ++p)
    if (!embed.count(indices[p]) || (p > 0 && indices[p - 1] >= indices[p]))
      schema_error("indices must be increasing and match the embed keys");
  w = EmbeddedWorld(j.at("depth").get<std::size_t>(), std::move(embed));
}

namespace {

const char* kind_name(TypeMap::Kind kind) {
  switch (kind) {
    case TypeMap::Kind::kTable:
      return "table";
    case TypeMap::Kind::kConstant:
      return "constant";
    case TypeMap::Kind::kHash:
      return "hash";
  }
  return "table";
}

}  // namespace

void to_json(Json& j, const TypeMap& m) {
  Json table = Json::array();
  for (const auto& [type, colour] : m.table) table.push_back(Json{{"type", type}, {"colour", colour}});
  j = Json{{"kind", kind_name(m.kind)}, {"colours", m.colour_count}, {"constant", m.constant},
           {"seed", m.seed}, {"table", table}};
}

void from_json(const Json& j, TypeMap& m) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "table")
    m.kind = TypeMap::Kind::kTable;
  else if (kind == "constant")
    m.kind = TypeMap::Kind::kConstant;
  else if (kind == "hash")
    m.kind = TypeMap::Kind::kHash;
  else
    schema_error("unknown type map kind '" + kind + "'");
  m.colour_count = j.at("colours").get<Colour>();
  m.constant = j.value("constant", Colour{0});
  m.seed = j.value("seed", std::uint64_t{0});
  if (m.colour_count == 0) schema_error("type map needs at least one colour");
  if (m.constant >= m.colour_count) schema_error("constant colour out of range");
  m.table.clear();
  for (const auto& entry : j.value("table", Json::array())) {
    auto colour = entry.at("colour").get<Colour>();
    if (colour >= m.colour_count) schema_error("table colour out of range");
    m.table[entry.at("type").get<SimilarityType>()] = colour;
  }
}

void to_json(Json& j, const BlockFamily& bf) { j = Json{{"blocks", bf.blocks}, {"nu", bf.nu}}; }
void from_json(const Json& j, BlockFamily& bf) {
  bf.blocks = j.at("blocks").get<std::vector<std::vector<Coord>>>();
  bf.nu = j.at("nu").get<std::vector<Level>>();
}

void to_json(Json& j, const ThinnedFamily& tf) {
  j = Json{{"m", tf.m}, {"sequences", tf.sequences}, {"deltas", tf.deltas},
           {"u", tf.u},  {"nu", tf.nu},               {"e_frak", nullptr}};
  if (tf.e_frak) j["e_frak"] = *tf.e_frak;
}

void from_json(const Json& j, ThinnedFamily& tf) {
  tf.m = j.at("m").get<std::size_t>();
  tf.sequences = j.at("sequences").get<std::vector<std::vector<Coord>>>();
  tf.deltas = j.at("deltas").get<std::vector<std::vector<Level>>>();
  tf.u = j.at("u").get<std::vector<std::vector<std::uint8_t>>>();
  tf.nu = j.at("nu").get<std::vector<Level>>();
  tf.e_frak.reset();
  if (j.contains("e_frak") && !j.at("e_frak").is_null())
    tf.e_frak = j.at("e_frak").get<std::vector<std::vector<std::uint8_t>>>();
}

void to_json(Json& j, const HomogeneousWitness& hw) {
  j = Json{{"body", hw.body}, {"tail", hw.tail}, {"v", hw.v}};
}
void from_json(const Json& j, HomogeneousWitness& hw) {
  hw.body = j.at("body").get<std::vector<Coord>>();
  hw.tail = j.at("tail").get<std::vector<Coord>>();
  hw.v = j.at("v").get<std::vector<Colour>>();
}

void to_json(Json& j, const WorldColourings& wc) {
  j = Json{{"r", wc.r}, {"colours", wc.colour_count}, {"type_maps", wc.type_maps}, {"world", nullptr}};
  if (wc.world) j["world"] = *wc.world;
}

void from_json(const Json& j, WorldColourings& wc) {
  wc.r = j.at("r").get<std::size_t>();
  wc.colour_count = j.at("colours").get<Colour>();
  wc.type_maps = j.at("type_maps").get<std::vector<TypeMap>>();
  if (wc.type_maps.size() != wc.r + 1) schema_error("expected r+1 type maps");
  wc.world.reset();
  if (!j.at("world").is_null())
    wc.world = std::make_shared<const EmbeddedWorld>(j.at("world").get<EmbeddedWorld>());
}

void to_json(Json& j, const ExtractionCertificate& cert) {
  const bool lemma = cert.mode == ExtractionCertificate::Mode::kLemma;
  j = Json{{"schema", kCertificateSchema},
           {"mode", lemma ? "lemma" : "pipeline"},
           {"r", cert.r},
           {"size", cert.size},
           {"l", cert.level},
           {"k", cert.k},
           {"colour", cert.colour},
           {"inputs_digest", cert.inputs_digest},
           {"x", cert.x},
           {"lemma", nullptr},
           {"pipeline", nullptr}};
  if (cert.lemma)
    j["lemma"] = Json{{"witness", cert.lemma->witness},
                      {"a", cert.lemma->a},
                      {"b", cert.lemma->b},
                      {"tail_part", cert.lemma->tail_part}};
  if (cert.pipeline)
    j["pipeline"] = Json{{"colourings", cert.pipeline->colourings},
                         {"blocks", cert.pipeline->blocks},
                         {"family", cert.pipeline->family},
                         {"candidate_colours", cert.pipeline->candidate_colours}};
}

void from_json(const Json& j, ExtractionCertificate& cert) {
  if (j.at("schema").get<std::string>() != kCertificateSchema)
    schema_error("unsupported certificate schema '" + j.at("schema").get<std::string>() + "'");
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "lemma")
    cert.mode = ExtractionCertificate::Mode::kLemma;
  else if (mode == "pipeline")
    cert.mode = ExtractionCertificate::Mode::kPipeline;
  else
    schema_error("unknown certificate mode '" + mode + "'");
  cert.r = j.at("r").get<std::size_t>();
  cert.size = j.at("size").get<std::size_t>();
  cert.level = j.at("l").get<std::size_t>();
  cert.k = j.at("k").get<std::size_t>();
  cert.colour = j.at("colour").get<Colour>();
  cert.inputs_digest = j.at("inputs_digest").get<std::string>();
  cert.x = j.at("x").get<std::vector<GroupElement>>();
  cert.lemma.reset();
  cert.pipeline.reset();
  if (!j.at("lemma").is_null()) {
    const auto& l = j.at("lemma");
    cert.lemma = LemmaData{l.at("witness").get<HomogeneousWitness>(),
                           l.at("a").get<std::vector<Coord>>(),
                           l.at("b").get<std::vector<std::vector<Coord>>>(),
                           l.at("tail_part").get<std::vector<Coord>>()};
  }
  if (!j.at("pipeline").is_null()) {
    const auto& p = j.at("pipeline");
    cert.pipeline = PipelineData{p.at("colourings").get<WorldColourings>(),
                                 p.at("blocks").get<BlockFamily>(),
                                 p.at("family").get<ThinnedFamily>(),
                                 p.at("candidate_colours").get<std::vector<Colour>>()};
  }
}

namespace {

SearchReport::Outcome parse_outcome(const std::string& text) {
  if (text == "found") return SearchReport::Outcome::kFound;
  if (text == "none-exists") return SearchReport::Outcome::kNoneExists;
  if (text == "budget-exhausted") return SearchReport::Outcome::kBudgetExhausted;
  schema_error("unknown search outcome '" + text + "'");
}

}  // namespace

void to_json(Json& j, const SearchReport& report) {
  j = Json{{"structure", report.structure},
           {"r", report.r},
           {"m", report.m},
           {"outcome", to_string(report.outcome)},
           {"colouring", nullptr},
           {"stats", Json{{"nodes", report.nodes},
                          {"prunes", report.prunes},
                          {"admissible_sets", report.admissible_sets}}},
           {"symmetry", report.symmetry}};
  if (report.colouring) j["colouring"] = *report.colouring;
}

void from_json(const Json& j, SearchReport& report) {
  report.structure = j.at("structure").get<std::string>();
  report.r = j.at("r").get<std::size_t>();
  report.m = j.at("m").get<std::size_t>();
  report.outcome = parse_outcome(j.at("outcome").get<std::string>());
  report.colouring.reset();
  if (!j.at("colouring").is_null()) report.colouring = j.at("colouring").get<std::vector<Colour>>();
  const auto& stats = j.at("stats");
  report.nodes = stats.at("nodes").get<std::uint64_t>();
  report.prunes = stats.at("prunes").get<std::uint64_t>();
  report.admissible_sets = stats.at("admissible_sets").get<std::uint64_t>();
  report.symmetry = j.at("symmetry").get<std::string>();
}

void to_json(Json& j, const EstimateReport& report) {
  j = Json{{"structure", report.structure}, {"m", report.m},
           {"r_max", report.r_max},         {"conclusive", report.conclusive},
           {"levels", report.levels},       {"minimal_r", nullptr}};
  if (report.minimal_r) j["minimal_r"] = *report.minimal_r;
}

void from_json(const Json& j, EstimateReport& report) {
  report.structure = j.at("structure").get<std::string>();
  report.m = j.at("m").get<std::size_t>();
  report.r_max = j.at("r_max").get<std::size_t>();
  report.conclusive = j.at("conclusive").get<bool>();
  report.levels = j.at("levels").get<std::vector<SearchReport>>();
  report.minimal_r.reset();
  if (!j.at("minimal_r").is_null()) report.minimal_r = j.at("minimal_r").get<std::size_t>();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kParse, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::kParse, "failed writing '" + path + "'");
}

}  // namespace sumset
