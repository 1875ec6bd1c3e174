#ifndef INVGEO_CLI_HPP
#define INVGEO_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "invgeo/sweep.hpp"

namespace invgeo::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default exhaustive-sweep cap.
inline constexpr const char* kCapEnv = "INVGEO_CAP_EXHAUSTIVE";

struct RunConfig {
  // gen, analyze, graph, metric, verify, qi, examples
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string out;  // empty: stdout only
  std::optional<std::uint32_t> radius;
  std::optional<std::uint32_t> basepoint;
  std::uint64_t seed = kDefaultSeed;
  // Largest monoid order swept exhaustively by triple checks.
  std::optional<std::size_t> cap_exhaustive;
  std::string format;  // dot, matrix or report; empty picks the default
  std::optional<std::vector<std::uint32_t>> generators;
  std::string kind;  // graph/metric: cayley, schutzenberger, rips
  std::optional<std::uint32_t> component;
  std::string example_action;  // examples: list or emit
  std::string example_name;
  std::size_t element_cap = 100'000;
};

// Runs one subcommand. Writes results to `out`, diagnostics to `err`, and
// returns kExitPass, kExitFail (verification failed) or kExitUsage (bad
// arguments, unreadable or malformed input).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Comma-separated non-negative integers; throws std::invalid_argument.
std::vector<std::uint32_t> parse_index_list(const std::string& text);

}  // namespace invgeo::cli

#endif  // INVGEO_CLI_HPP
