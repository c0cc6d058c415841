#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sumset::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kSuccess = 0,
  kUsage = 1,
  kNegative = 2,
  kExhausted = 3,
};

struct RunConfig {
  std::string subcommand;
  std::size_t r = 2;
  /// |X| for extract/pipeline, the witness size m for search, the m that
  /// gen-world sizes its world for.
  std::optional<std::size_t> size;
  std::optional<std::size_t> depth;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_nodes;
  double budget_secs = 0;
  std::size_t jobs = 1;
  std::string format = "text";
  bool force = false;
  std::string in;
  std::string out;

  std::size_t k = 2;
  std::string structure = "interval:8";
  bool estimate = false;
  std::string mode = "comb";
  std::optional<std::size_t> world_size;
  std::optional<unsigned> constant_colour;
};

int cmd_types(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen_world(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches cfg.subcommand; library errors become exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Smallest world sizes gen-world accepts without --force.
std::size_t min_world_size(std::size_t r, std::size_t m);
std::size_t min_world_depth(std::size_t r);

}  // namespace sumset::cli
