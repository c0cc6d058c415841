#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "sumset/adversary.hpp"
#include "sumset/cantor.hpp"
#include "sumset/error.hpp"
#include "sumset/extraction.hpp"
#include "sumset/json_io.hpp"
#include "sumset/world_gen.hpp"

namespace sumset::cli {

namespace {

// Emits the JSON artifact to --out (always) and to stdout in json format;
// text format prints the summary instead.
void emit(const RunConfig& cfg, const Json& artifact, const std::string& summary,
          std::ostream& out) {
  const std::string text = dump(artifact);
  if (!cfg.out.empty()) write_file(cfg.out, text);
  if (cfg.format == "json")
    out << text;
  else
    out << summary << "\n";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResource:
      return kExhausted;
    case ErrorKind::kInsufficientWorld:
    case ErrorKind::kThinningFailure:
    case ErrorKind::kUniformization:
    case ErrorKind::kNotCanonical:
    case ErrorKind::kInvalidWitness:
    case ErrorKind::kNoCollision:
      return kNegative;
    default:
      return kUsage;
  }
}

std::string require_in(const RunConfig& cfg) {
  if (cfg.in.empty())
    throw Error(ErrorKind::kInvalidArgument, cfg.subcommand + " needs --in");
  return read_file(cfg.in);
}

WorldGenOptions::Mode parse_mode(const std::string& mode) {
  if (mode == "comb") return WorldGenOptions::Mode::kComb;
  if (mode == "random") return WorldGenOptions::Mode::kRandom;
  if (mode == "complete") return WorldGenOptions::Mode::kComplete;
  throw Error(ErrorKind::kInvalidArgument, "unknown world mode '" + mode + "'");
}

HomogeneousWitness synthetic_witness(std::size_t r, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HomogeneousWitness hw;
  for (std::size_t l = 0; l <= r; ++l) hw.v.push_back(static_cast<Colour>(rng() % r));
  const std::size_t body = 2 * r + size * r;
  for (std::size_t i = 0; i < body; ++i) hw.body.push_back(static_cast<Coord>(i));
  for (std::size_t i = 0; i + 1 < r; ++i) hw.tail.push_back(static_cast<Coord>(body + i));
  return hw;
}

std::string certificate_summary(const ExtractionCertificate& cert) {
  return std::string(cert.mode == ExtractionCertificate::Mode::kLemma ? "lemma" : "pipeline") +
         " certificate: r=" + std::to_string(cert.r) + " |X|=" + std::to_string(cert.size) +
         " l=" + std::to_string(cert.level) + " k=" + std::to_string(cert.k) +
         " colour=" + std::to_string(cert.colour) + " digest=" + cert.inputs_digest;
}

}  // namespace

std::size_t min_world_size(std::size_t r, std::size_t m) { return 16 * r * (m + 1); }
std::size_t min_world_depth(std::size_t r) { return 64 * r; }

int cmd_types(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.k == 0) throw Error(ErrorKind::kInvalidArgument, "types needs --k >= 1");
  const std::size_t depth = cfg.depth.value_or(std::max<std::size_t>(cfg.k, 1));
  auto reps = type_representatives(cfg.k, depth);
  Json types = Json::array();
  for (const auto& [type, tuple] : reps) {
    std::vector<std::string> words;
    for (const auto& w : tuple.coords()) words.push_back(w.to_string());
    types.push_back(Json{{"key", type.key()}, {"type", type}, {"representative", words}});
  }
  Json report{{"k", cfg.k}, {"depth", depth}, {"count", reps.size()}, {"types", types}};
  emit(cfg, report,
       "k=" + std::to_string(cfg.k) + " depth=" + std::to_string(depth) +
           " types=" + std::to_string(reps.size()),
       out);
  return kSuccess;
}

int cmd_gen_world(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.r == 0) throw Error(ErrorKind::kInvalidArgument, "gen-world needs --r >= 1");
  const std::size_t m = cfg.size.value_or(5);
  WorldGenOptions o;
  o.mode = parse_mode(cfg.mode);
  o.seed = cfg.seed;
  o.teeth = std::max<std::size_t>(cfg.r, 1);
  o.size = cfg.world_size.value_or(std::size_t{256} << std::min<std::size_t>(cfg.r - 1, 4));
  o.depth = cfg.depth.value_or(o.mode == WorldGenOptions::Mode::kComplete ? 12 : 256 * cfg.r);
  const std::size_t words = o.mode == WorldGenOptions::Mode::kComplete
                                ? (o.depth <= 20 ? std::size_t{1} << o.depth : 0)
                                : o.size;
  if (!cfg.force) {
    std::vector<std::string> problems;
    if (words < min_world_size(cfg.r, m))
      problems.push_back("world of " + std::to_string(words) + " words is below the minimum " +
                         std::to_string(min_world_size(cfg.r, m)) + " for r=" +
                         std::to_string(cfg.r) + ", m=" + std::to_string(m));
    if (o.mode != WorldGenOptions::Mode::kComplete && o.depth < min_world_depth(cfg.r))
      problems.push_back("depth " + std::to_string(o.depth) + " is below the minimum " +
                         std::to_string(min_world_depth(cfg.r)));
    if (!problems.empty()) {
      err << "gen-world: " << join(problems, "; ") << " (use --force to override)\n";
      return kUsage;
    }
  }
  auto world = std::make_shared<const EmbeddedWorld>(generate_world(o));
  const Colour colours = static_cast<Colour>(cfg.r);
  std::vector<TypeMap> maps;
  if (cfg.constant_colour) {
    if (*cfg.constant_colour >= colours)
      throw Error(ErrorKind::kInvalidArgument, "--constant-colour must be below r");
    maps.assign(cfg.r + 1, TypeMap::constant_map(colours, *cfg.constant_colour));
  } else {
    maps = generate_type_maps(cfg.r, colours, cfg.seed);
  }
  WorldColourings wc{cfg.r, colours, world, std::move(maps)};
  emit(cfg, Json(wc),
       "world: " + std::to_string(world->size()) + " words of depth " +
           std::to_string(world->depth()) + ", " + std::to_string(cfg.r + 1) +
           " type maps over " + std::to_string(colours) + " colours",
       out);
  return kSuccess;
}

int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::size_t size = cfg.size.value_or(8);
  HomogeneousWitness hw;
  std::size_t r = cfg.r;
  if (!cfg.in.empty()) {
    hw = parse_as<HomogeneousWitness>(read_file(cfg.in));
    if (hw.v.empty()) throw Error(ErrorKind::kInvalidWitness, "witness has no pattern colours");
    r = hw.v.size() - 1;
  } else {
    if (r == 0) throw Error(ErrorKind::kInvalidArgument, "extract needs --r >= 1");
    hw = synthetic_witness(r, size, cfg.seed);
  }
  Colour colours = static_cast<Colour>(r);
  for (Colour v : hw.v) colours = std::max<Colour>(colours, v + 1);
  auto c = synthetic_colouring(hw, r, colours);
  auto cert = leader_extract(c, hw, r, size);
  emit(cfg, Json(cert), certificate_summary(cert), out);
  return kSuccess;
}

int cmd_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto wc = parse_as<WorldColourings>(require_in(cfg));
  if (!wc.world) throw Error(ErrorKind::kParse, "colouring file carries no world");
  PipelineOptions options;
  if (cfg.budget_nodes) options.limits.max_nodes = *cfg.budget_nodes;
  auto cert = run_pipeline(wc, cfg.size.value_or(5), options);
  emit(cfg, Json(cert), certificate_summary(cert), out);
  return kSuccess;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto structure = AdditiveStructure::parse(cfg.structure);
  const std::size_t m = cfg.size.value_or(2);
  SearchBudget budget{cfg.budget_nodes.value_or(10'000'000), cfg.budget_secs};
  if (cfg.estimate) {
    auto report = estimate_r(structure, m, cfg.r, budget, cfg.jobs);
    std::string summary = structure.name() + ", m=" + std::to_string(m) + ": ";
    int code;
    if (report.minimal_r && report.conclusive) {
      summary += "r(A,m) = " + std::to_string(*report.minimal_r);
      code = kSuccess;
    } else if (report.minimal_r) {
      summary += "r(A,m) <= " + std::to_string(*report.minimal_r) + " (lower levels exhausted budget)";
      code = kExhausted;
    } else if (report.conclusive) {
      summary += "r(A,m) >= " + std::to_string(cfg.r + 1);
      code = kNegative;
    } else {
      summary += "unknown within budget for r <= " + std::to_string(cfg.r);
      code = kExhausted;
    }
    emit(cfg, Json(report), summary, out);
    return code;
  }
  auto report = find_bad_colouring(structure, cfg.r, m, budget, cfg.jobs);
  std::string summary = structure.name() + ", r=" + std::to_string(cfg.r) +
                        ", m=" + std::to_string(m) + ": " + to_string(report.outcome) +
                        " (nodes " + std::to_string(report.nodes) + ")";
  if (report.colouring) {
    std::string table;
    for (Colour c : *report.colouring) table += std::to_string(c);
    summary += "\ncolouring " + table;
  }
  emit(cfg, Json(report), summary, out);
  switch (report.outcome) {
    case SearchReport::Outcome::kFound:
      return kSuccess;
    case SearchReport::Outcome::kNoneExists:
      return kNegative;
    case SearchReport::Outcome::kBudgetExhausted:
      break;
  }
  return kExhausted;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto cert = parse_as<ExtractionCertificate>(require_in(cfg));
  VerifyResult verdict;
  try {
    verdict = verify_certificate(certificate_colouring(cert), cert);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    verdict.ok = false;
    verdict.diagnostics.push_back(std::string(to_string(e.kind())) + ": " + e.what());
  }
  Json report{{"ok", verdict.ok}, {"diagnostics", verdict.diagnostics}};
  std::string summary = verdict.ok ? "verified: " + certificate_summary(cert)
                                   : "REJECTED:\n  " + join(verdict.diagnostics, "\n  ");
  emit(cfg, report, summary, out);
  return verdict.ok ? kSuccess : kNegative;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "text" && cfg.format != "json")
      throw Error(ErrorKind::kInvalidArgument, "--format must be text or json");
    if (cfg.subcommand == "types") return cmd_types(cfg, out, err);
    if (cfg.subcommand == "gen-world") return cmd_gen_world(cfg, out, err);
    if (cfg.subcommand == "extract") return cmd_extract(cfg, out, err);
    if (cfg.subcommand == "pipeline") return cmd_pipeline(cfg, out, err);
    if (cfg.subcommand == "search") return cmd_search(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    err << "unknown subcommand '" << cfg.subcommand << "'\n";
    return kUsage;
  } catch (const Error& e) {
    err << cfg.subcommand << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << cfg.subcommand << ": " << e.what() << "\n";
    return kUsage;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sumsetlab: monochromatic sumset constructions, certificates and searches"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t size = 0, depth = 0, world_size = 0;
  std::uint64_t budget_nodes = 0;
  unsigned constant = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format on stdout: text or json")
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the JSON artifact to this file");
  };

  auto* types = app.add_subcommand("types", "Count similarity types of k-tuples and list representatives");
  types->add_option("--k", cfg.k, "Tuple length")->capture_default_str();
  types->add_option("--depth", depth, "Word depth (default: k)");
  common(types);

  auto* gen = app.add_subcommand("gen-world", "Generate an embedded world and r+1 type maps");
  gen->add_option("--r", cfg.r, "Number of colours")->capture_default_str();
  gen->add_option("--size", size, "Witness size m the world is sized for (default 5)");
  gen->add_option("--world-size", world_size, "Number of words (default 256*2^(r-1))");
  gen->add_option("--depth", depth, "Word depth (default 256*r, 12 for complete trees)");
  gen->add_option("--seed", cfg.seed, "Seed for the world and the type maps")->capture_default_str();
  gen->add_option("--mode", cfg.mode, "World shape: comb, random or complete")->capture_default_str();
  gen->add_option("--constant-colour", constant, "Use constant type maps of this colour");
  gen->add_flag("--force", cfg.force, "Skip the minimum size checks");
  common(gen);

  auto* extract = app.add_subcommand("extract", "Leader extraction from a homogeneous witness");
  extract->add_option("--r", cfg.r, "Number of colours (ignored with --in)")->capture_default_str();
  extract->add_option("--size", size, "|X| (default 8)");
  extract->add_option("--seed", cfg.seed, "Seed for the synthetic pattern colours")->capture_default_str();
  extract->add_option("--in", cfg.in, "Witness JSON {body, tail, v}; synthetic when omitted");
  common(extract);

  auto* pipeline = app.add_subcommand("pipeline", "Full extraction over a gen-world file");
  pipeline->add_option("--in", cfg.in, "gen-world output")->required();
  pipeline->add_option("--size", size, "|X| (default 5)");
  pipeline->add_option("--budget-nodes", budget_nodes, "Node budget of each Ramsey search (default 2000000)");
  common(pipeline);

  auto* search = app.add_subcommand("search", "Search colourings with no monochromatic X+X");
  search->add_option("--structure", cfg.structure, "interval:N, cyclic:N or sum:D:CAP")->capture_default_str();
  search->add_option("--r", cfg.r, "Colours (maximum colours with --estimate)")->capture_default_str();
  search->add_option("--size", size, "Witness size m (default 2)");
  search->add_option("--budget-nodes", budget_nodes, "Node budget (default 10000000)");
  search->add_option("--budget-secs", cfg.budget_secs, "Wall-clock budget, 0 for none")->capture_default_str();
  search->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  search->add_flag("--estimate", cfg.estimate, "Find the least r <= --r with a bad colouring");
  common(search);

  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("--in", cfg.in, "Certificate JSON")->required();
  common(verify);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      err << sub->help();
    return kUsage;
  }
  auto* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  auto given = [&](const char* name) {
    const auto* option = chosen->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  if (given("--size")) cfg.size = size;
  if (given("--depth")) cfg.depth = depth;
  if (given("--world-size")) cfg.world_size = world_size;
  if (given("--constant-colour")) cfg.constant_colour = constant;
  if (given("--budget-nodes")) cfg.budget_nodes = budget_nodes;
  return run(cfg, out, err);
}

}  // namespace sumset::cli
