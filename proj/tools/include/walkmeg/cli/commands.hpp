#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walkmeg/cli/result_table.hpp"
#include "walkmeg/coin.hpp"

namespace walkmeg::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitResourceGuard = 3,
  kExitVerificationFailed = 4,
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed command line. Defaults are the documented CLI defaults.
/// Thrown by parse_args when --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

struct RunConfig {
  std::string command;       ///< simulate | fidelity-curve | search | verify | bloch
  std::string search_mode;   ///< brute | anneal | landscape
  std::optional<std::size_t> steps;                            ///< --T
  std::optional<std::pair<std::size_t, std::size_t>> step_range;  ///< --T-range A..B
  std::optional<std::string> coin_set;                          ///< --set
  std::optional<std::string> bits;                              ///< --bits
  std::string init = "H";                                       ///< --init
  std::size_t ensemble = 296;                                   ///< --ensemble
  std::size_t grid = 17;                                        ///< --grid
  std::size_t samples = 500;                                    ///< --n
  std::size_t max_steps = 10;                                   ///< --max-T
  std::optional<std::string> pattern;                           ///< --pattern l1,l2[,l3]
  bool prefixed = false;                                        ///< --prefixed
  std::size_t restarts = 10;                                    ///< --restarts
  std::uint64_t seed = 0;                                       ///< --seed
  double tolerance = 1e-9;                                      ///< --tol
  std::string format = "csv";                                   ///< --format
  std::optional<std::string> out;                               ///< --out
  std::vector<std::string> echo;  ///< argv without --out, enough to replay the run
};

/// A two-element coin set (coin0 = bit 0). Single-coin sets repeat the coin.
struct CoinSet {
  std::string label;
  CoinOperator coin0;
  CoinOperator coin1;
  bool single = false;
  /// C(gamma) angles when both coins belong to that family (I maps to gamma = 0, i.e. sigma_z).
  std::optional<std::pair<double, double>> gammas;
};

/// "H,I", "H" or "g:0.0,0.785...".
CoinSet parse_coin_set(const std::string& spec);

/// Throws UsageError on malformed input (CLI11 errors included).
RunConfig parse_args(const std::vector<std::string>& args);

ResultTable cmd_simulate(const RunConfig& config);
ResultTable cmd_fidelity_curve(const RunConfig& config);
ResultTable cmd_search(const RunConfig& config);
ResultTable cmd_verify(const RunConfig& config);
ResultTable cmd_bloch(const RunConfig& config);

/// Dispatches and serializes. Returns an ExitCode. Table output goes to
/// config.out (or `out` when absent); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walkmeg::cli
